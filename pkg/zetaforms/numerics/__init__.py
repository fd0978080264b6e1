"""
High-precision evaluation. Only the modules independent of zetaforms.forms
are re-exported here; series and verify are imported from their modules.
"""

from zetaforms.numerics.hurwitz import divisor_formula_check, hurwitz_zeta
from zetaforms.numerics.precision import (
    PrecisionValue,
    Residual,
    RootOfUnity,
    working_context,
)

__all__ = [
    "PrecisionValue",
    "Residual",
    "RootOfUnity",
    "divisor_formula_check",
    "hurwitz_zeta",
    "working_context",
]
