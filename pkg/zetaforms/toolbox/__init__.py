from typing import Dict

from zetaforms.checks.check import Check
from zetaforms.toolbox.forms import CombineCheck, FormCheck
from zetaforms.toolbox.suite import AllChecks, Suite
from zetaforms.toolbox.verify import (
    Growth,
    VerifyD2,
    VerifyEq1,
    VerifyFilter,
    VerifyPfq,
    VerifyTheorem1,
)


def build_checks() -> Dict[str, Check]:
    """One instance of every command's check, keyed by command name."""
    checks: Dict[str, Check] = {}
    for check in [
        FormCheck(),
        VerifyEq1(),
        VerifyTheorem1(),
        VerifyFilter(),
        VerifyPfq(),
        CombineCheck(),
        Growth(),
        VerifyD2(),
    ]:
        checks[check.name] = check
    checks["all"] = AllChecks(checks)
    checks["suite"] = Suite(checks)
    return checks


__all__ = [
    "AllChecks",
    "CombineCheck",
    "FormCheck",
    "Growth",
    "Suite",
    "VerifyD2",
    "VerifyEq1",
    "VerifyFilter",
    "VerifyPfq",
    "VerifyTheorem1",
    "build_checks",
]
