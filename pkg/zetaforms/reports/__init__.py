from zetaforms.reports.report import (
    SCHEMA,
    CheckOutcome,
    Report,
    RunConfig,
    Section,
    resolve_params,
)

__all__ = [
    "SCHEMA",
    "CheckOutcome",
    "Report",
    "RunConfig",
    "Section",
    "resolve_params",
]
