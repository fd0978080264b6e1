"""Arguments and helpers shared by the checks behind each command."""

from typing import Callable, Iterable, List, Optional, Tuple

from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Context
from zetaforms.errors import ConditioningError, PrecisionError
from zetaforms.forms.rational_function import Params
from zetaforms.numerics.precision import Residual
from zetaforms.reports.report import CheckOutcome, Section


def params_arguments(default_digits: int = 40) -> List[Argument]:
    return [
        Argument("D", "Denominator of the shifts j/D", "int", required=True),
        Argument("s", "Exponent; must satisfy s >= 3D-1", "int", required=True),
        Argument("n", "Index of the form; even unless --allow-odd-n", "int", required=True),
        Argument(
            "digits",
            "Target number of correct decimal digits",
            "int",
            default=default_digits,
        ),
        Argument(
            "allow_odd_n",
            "Admit odd n (only D=2 with s odd)",
            "bool",
            default=False,
        ),
        Argument(
            "allow_degenerate_n",
            "Admit n = 0",
            "bool",
            default=False,
        ),
    ]


def j_argument() -> Argument:
    return Argument("j", "Single shift index in 1..D; all j when omitted", "int")


def shifts(params: Params, j: Optional[int]) -> Iterable[int]:
    return [j] if j is not None else range(1, params.D + 1)


def attempt(
    name: str, compute: Callable[[], Residual]
) -> Tuple[CheckOutcome, dict]:
    """
    Run a numerical cross-check, returning its outcome and its JSON record.
    A computation that cannot reach its target is reported as a failed
    check rather than aborting the report.
    """
    try:
        residual = compute()
    except (PrecisionError, ConditioningError) as e:
        return (
            CheckOutcome(name=name, passed=False, detail=str(e)),
            {"name": name, "error": str(e), "pass": False},
        )
    return CheckOutcome.from_residual(residual), residual.to_json()


def publish(context: Context, section: Section) -> Section:
    for outcome in section.checks:
        context.verdict(outcome.name, outcome.passed, outcome.detail or "")
    return section
