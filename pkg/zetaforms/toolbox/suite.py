"""
The composite commands: `all` runs every applicable check for one parameter
set, `suite` runs the pinned acceptance grid across a thread pool.
"""

from typing import Any, Dict, List

from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.checks.example import Example
from zetaforms.flow.parallel_list import ParallelList
from zetaforms.flow.sequence import Sequence
from zetaforms.numerics.hurwitz import divisor_formula_check
from zetaforms.reports.report import Section
from zetaforms.toolbox.common import attempt, publish
from zetaforms.utils.timer import Timer

# the Beta-factor and hypergeometric tails are power-law bounded, so these
# checks run at reduced precision inside `all` and `suite`
THEOREM1_DIGITS = 12
PFQ_DIGITS = 16

EQ1_GRID = [(1, 2, 2), (1, 3, 2), (1, 4, 4), (2, 5, 2), (2, 5, 4), (3, 8, 2)]
THEOREM1_GRID = [(1, 3, 2, 10), (2, 5, 2, 10), (3, 8, 2, 8)]
PFQ_GRID = [(1, 3, 2), (2, 5, 2)]
FILTER_GRID = [(2, 5, 0), (2, 5, 2), (3, 8, 0), (3, 8, 2)]
D2_GRID = [(5, 2), (7, 2), (5, 4)]
DIVISORS = [1, 2, 3, 4, 6]
DIVISOR_ORDERS = [2, 3, 5]


def _cap(digits: int):
    def formatter(args: Dict[str, Any]) -> Dict[str, Any]:
        args = dict(args)
        args["digits"] = min(args.get("digits", digits), digits)
        return args

    return formatter


def _has_d2_form(args: Dict[str, Any]) -> bool:
    return args["D"] == 2 and args["s"] % 2 == 1


def _combinable(args: Dict[str, Any]) -> bool:
    if args.get("weights") is not None:
        return True
    return _has_d2_form(args) and args["s"] >= 5


class AllChecks(Sequence):
    def __init__(self, checks: Dict[str, Check]):
        super().__init__(
            name="all",
            description=(
                "Run every applicable check for one parameter set: form, "
                "verify-eq1, verify-theorem1 (at most "
                f"{THEOREM1_DIGITS} digits), verify-filter, verify-pfq (at "
                f"most {PFQ_DIGITS} digits), and for D=2 with s odd "
                "verify-d2 and combine."
            ),
            arguments=None,
            steps=[
                checks["form"],
                checks["verify-eq1"],
                checks["verify-theorem1"],
                checks["verify-filter"],
                checks["verify-pfq"],
                checks["verify-d2"],
                checks["combine"],
            ],
            formatters=[
                None,
                None,
                _cap(THEOREM1_DIGITS),
                None,
                _cap(PFQ_DIGITS),
                _cap(THEOREM1_DIGITS),
                None,
            ],
            conditions=[None, None, None, None, None, _has_d2_form, _combinable],
            examples=[Example(name="D=2", args={"D": 2, "s": 5, "n": 2})],
        )


def acceptance_grid() -> List[Dict[str, Any]]:
    """Every case of the acceptance suite, in report order."""
    cases: List[Dict[str, Any]] = []
    for D, s, n in EQ1_GRID:
        cases.append({"kind": "form", "D": D, "s": s, "n": n})
        cases.append({"kind": "verify-eq1", "D": D, "s": s, "n": n, "digits": 40})
    for D, s, n, digits in THEOREM1_GRID:
        cases.append(
            {"kind": "verify-theorem1", "D": D, "s": s, "n": n, "digits": digits}
        )
    for D, s, n in FILTER_GRID:
        cases.append(
            {
                "kind": "verify-filter",
                "D": D,
                "s": s,
                "n": n,
                "digits": 25,
                "allow_degenerate_n": n == 0,
            }
        )
    for D, s, n in PFQ_GRID:
        cases.append({"kind": "verify-pfq", "D": D, "s": s, "n": n, "digits": PFQ_DIGITS})
    for s, n in D2_GRID:
        cases.append({"kind": "combine", "D": 2, "s": s, "n": n, "weights": [-1, 7]})
    for d in DIVISORS:
        cases.append({"kind": "divisor", "d": d})
    return cases


class SuiteCase(Check):
    """Runs one case of the acceptance grid through the matching check."""

    def __init__(self, checks: Dict[str, Check]):
        self.checks = checks
        super().__init__(
            name="suite-case",
            description="Run one acceptance case, given as {'kind': ..., **args}",
            args=[Argument("case", "The case to run", "dict", required=True)],
            func=self.run_case,
        )

    def run_case(self, context: Context, case: Dict[str, Any]) -> Section:
        args = dict(case)
        kind = args.pop("kind")
        if kind == "divisor":
            return self._divisor(context, args["d"])
        return self.checks[kind](context, **args)

    def _divisor(self, context: Context, d: int) -> Section:
        checks, residuals = [], []
        with Timer() as timer:
            for i in DIVISOR_ORDERS:
                outcome, record = attempt(
                    f"divisor formula d={d} i={i}",
                    lambda: divisor_formula_check(d, i, 30),
                )
                checks.append(outcome)
                residuals.append(record)
        section = Section(
            name=f"divisor formula d={d}",
            data={"d": d, "residuals": residuals},
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


def _flatten(results: List[Any]) -> List[Section]:
    sections: List[Section] = []
    for result in results:
        if isinstance(result, list):
            sections.extend(result)
        else:
            sections.append(result)
    return sections


class Suite(Check):
    """
    The acceptance grid, one case per task, followed by a summary section
    listing cases and failed checks per kind. The summary adds no checks
    of its own.
    """

    def __init__(self, checks: Dict[str, Check]):
        self.runner = ParallelList(
            SuiteCase(checks),
            item_formatter=lambda case: {"case": case},
            result_formatter=_flatten,
            name="suite::cases",
        )
        super().__init__(
            name="suite",
            description=(
                "Run the pinned acceptance grid in parallel and print a "
                "one-page summary."
            ),
            args=[],
            func=self.run_suite,
            examples=[Example(name="text", args={"format": "text"})],
        )

    def run_suite(self, context: Context) -> List[Section]:
        with Timer() as timer:
            grid = acceptance_grid()
            sections = self.runner(context, input=grid)

        summary: Dict[str, Dict[str, Any]] = {}
        for case, section in zip(grid, sections):
            entry = summary.setdefault(
                case["kind"], {"cases": 0, "checks": 0, "failed": []}
            )
            entry["cases"] += 1
            entry["checks"] += len(section.checks)
            entry["failed"] += [c.name for c in section.checks if not c.passed]

        overview = Section(
            name="suite summary",
            data={"kinds": summary, "cases": len(grid)},
            elapsed=timer.elapsed,
        )
        return sections + [overview]
