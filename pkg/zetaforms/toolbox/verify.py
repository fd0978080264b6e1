"""Checks comparing independent numerical evaluations of r_{n,j}."""

from fractions import Fraction
from typing import List, Optional

from zetaforms.arith.core import format_rational
from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.checks.example import Example
from zetaforms.errors import ConditioningError, PrecisionError
from zetaforms.forms.linear_forms import build_forms
from zetaforms.numerics.series import eval_r_direct
from zetaforms.numerics.verify import (
    d2_integral_check,
    eq1_residual,
    generating_coefficient_check,
    growth_report,
    hypergeometric_parameters,
    pfq_cross_check,
    roots_filter_check,
    verify_theorem1,
)
from zetaforms.reports.report import CheckOutcome, Section, resolve_params
from zetaforms.toolbox.common import (
    attempt,
    j_argument,
    params_arguments,
    publish,
    shifts,
)
from zetaforms.utils.timer import Timer

FILTER_POINTS = [Fraction(0), Fraction(1, 2), Fraction(-1, 3)]
GENERATING_TERMS = 24


class VerifyEq1(Check):
    """Direct summation of r_{n,j} against its linear form, and positivity."""

    def __init__(self):
        super().__init__(
            name="verify-eq1",
            description=(
                "Sum r_{n,j} = sum_{m>=1} R(m + j/D) directly and compare it "
                "with a_{0,j} + sum a_i zeta(i, j/D) evaluated from the exact "
                "coefficients. Also checks r_{n,j} > 0 (value minus error)."
            ),
            args=params_arguments() + [j_argument()],
            func=self.verify,
            examples=[
                Example(
                    name="D=3",
                    args={"D": 3, "s": 8, "n": 2, "digits": 40},
                    output="residuals below 1e-35",
                )
            ],
        )

    def verify(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 40,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        j: Optional[int] = None,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        checks: List[CheckOutcome] = []
        residuals, values = [], {}
        with Timer() as timer:
            forms = build_forms(params).forms
            for form in forms:
                if j is not None and form.j != j:
                    continue
                outcome, record = attempt(
                    f"eq1 {label} j={form.j}",
                    lambda: eq1_residual(form, digits),
                )
                checks.append(outcome)
                residuals.append(record)

                try:
                    value = eval_r_direct(params, form.j, digits)
                except PrecisionError as e:
                    checks.append(
                        CheckOutcome.exact(f"positive {label} j={form.j}", False, str(e))
                    )
                    continue
                values[str(form.j)] = value.to_json()
                checks.append(
                    CheckOutcome.exact(
                        f"positive {label} j={form.j}",
                        value.certainly_positive(),
                        f"r = {value}",
                    )
                )

        section = Section(
            name=f"verify-eq1 {label}",
            data={"params": params.to_json(), "values": values, "residuals": residuals},
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class VerifyTheorem1(Check):
    """
    r_{n,j} against D^{s-1} (3Dn+1)!/n!^{3D} sum_m xi^{-mj} r*_{n,m}, the
    right side summed from its Beta-factor series. The tail bound of that
    series is heuristic and reported as such.
    """

    def __init__(self):
        super().__init__(
            name="verify-theorem1",
            description=(
                "Compare r_{n,j} with its representation through the integrals "
                "r*_{n,m}, m = 1..D, summed as an exact series of Beta factors. "
                "The imaginary part of the reconstruction is gated too."
            ),
            args=params_arguments(default_digits=12) + [j_argument()],
            func=self.verify,
            examples=[
                Example(
                    name="D=1",
                    args={"D": 1, "s": 3, "n": 2, "digits": 12},
                    output="residual below 1e-10",
                )
            ],
        )

    def verify(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 12,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        j: Optional[int] = None,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        checks, residuals = [], []
        with Timer() as timer:
            for shift in shifts(params, j):
                outcome, record = attempt(
                    f"theorem1 {label} j={shift}",
                    lambda: verify_theorem1(params, shift, digits),
                )
                checks.append(outcome)
                residuals.append(record)

        section = Section(
            name=f"verify-theorem1 {label}",
            data={"params": params.to_json(), "residuals": residuals},
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class VerifyFilter(Check):
    def __init__(self):
        super().__init__(
            name="verify-filter",
            description=(
                "Check the roots-of-unity filter: the terms l = j-1 (mod D) of "
                "(1 - x)^{-(3Dn+2)} against (1/D) sum_m xi^{-m(j-1)} "
                "(1 - xi^m x)^{-(3Dn+2)}, at x in {0, 1/2, -1/3} unless --x "
                "is given. Also checks exactly that x^{j-1} f_j(x^D) has the "
                "filtered binomial coefficients."
            ),
            args=params_arguments()
            + [
                j_argument(),
                Argument("x", "Rational point p/q with |x| < 1", "rational"),
            ],
            func=self.verify,
            examples=[
                Example(
                    name="closed form",
                    args={
                        "D": 2,
                        "s": 5,
                        "n": 0,
                        "j": 1,
                        "x": "1/2",
                        "allow-degenerate-n": True,
                    },
                    output="both sides equal 20/9",
                )
            ],
        )

    def verify(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 40,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        j: Optional[int] = None,
        x: Optional[Fraction] = None,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        points = FILTER_POINTS if x is None else [Fraction(x)]
        checks, residuals = [], []
        with Timer() as timer:
            for shift in shifts(params, j):
                for point in points:
                    outcome, record = attempt(
                        f"filter {label} j={shift} x={format_rational(point)}",
                        lambda: roots_filter_check(params, shift, point, digits),
                    )
                    checks.append(outcome)
                    residuals.append(record)
                generating = generating_coefficient_check(
                    params, shift, GENERATING_TERMS
                )
                checks.append(CheckOutcome.from_residual(generating))
                residuals.append(generating.to_json())

        section = Section(
            name=f"verify-filter {label}",
            data={"params": params.to_json(), "residuals": residuals},
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class VerifyPfq(Check):
    def __init__(self):
        super().__init__(
            name="verify-pfq",
            description=(
                "Sum the hypergeometric row prefactor * sum_k prod (upper)_k / "
                "prod (lower)_k by its term recurrence and compare it with "
                "the direct series for r_{n,j}."
            ),
            args=params_arguments(default_digits=16) + [j_argument()],
            func=self.verify,
            examples=[
                Example(
                    name="D=2",
                    args={"D": 2, "s": 5, "n": 2, "digits": 16},
                    output="residuals below 1e-15",
                )
            ],
        )

    def verify(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 16,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        j: Optional[int] = None,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        checks, residuals, parameters = [], [], {}
        with Timer() as timer:
            for shift in shifts(params, j):
                parameters[str(shift)] = hypergeometric_parameters(params, shift).to_json()
                outcome, record = attempt(
                    f"pfq {label} j={shift}",
                    lambda: pfq_cross_check(params, shift, digits),
                )
                checks.append(outcome)
                residuals.append(record)

        section = Section(
            name=f"verify-pfq {label}",
            data={
                "params": params.to_json(),
                "hypergeometric": parameters,
                "residuals": residuals,
            },
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class VerifyD2(Check):
    """7 r_{n,2} - r_{n,1} against its real integral over [0, 1]."""

    def __init__(self):
        super().__init__(
            name="verify-d2",
            description=(
                "For D=2 and s odd, compare 7 r_{n,2} - r_{n,1} with "
                "2^s (6n+1)!/n!^6 sum_k C(6n+1+k, k) I_k^{s+1} (3 - 4(-1)^k). "
                "Odd n is admitted with --allow-odd-n."
            ),
            args=params_arguments(default_digits=12),
            func=self.verify,
            examples=[
                Example(
                    name="odd n",
                    args={"D": 2, "s": 5, "n": 1, "allow-odd-n": True},
                )
            ],
        )

    def verify(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 12,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        with Timer() as timer:
            outcome, record = attempt(
                f"d2 integral {label}", lambda: d2_integral_check(params, digits)
            )

        section = Section(
            name=f"verify-d2 {label}",
            data={"params": params.to_json(), "residuals": [record]},
            checks=[outcome],
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class Growth(Check):
    """
    r_{n,j} and r_{n,j}^{1/n} along increasing n. Only positivity is
    checked; the log-ratio summary is informational.
    """

    def __init__(self):
        super().__init__(
            name="growth",
            description=(
                "Evaluate r_{n,j} for each n in --n-values at fixed (D, s) and "
                "summarize the successive log-ratios."
            ),
            args=[
                arg for arg in params_arguments() if arg.name != "n"
            ]
            + [
                j_argument(),
                Argument(
                    "n_values",
                    "Increasing values of n, e.g. 2,4,6",
                    "list[int]",
                    required=True,
                ),
            ],
            func=self.report,
            examples=[
                Example(
                    name="D=1",
                    args={"D": 1, "s": 3, "n-values": "2,4,6,8", "j": 1},
                )
            ],
        )

    def report(
        self,
        context: Context,
        D: int,
        s: int,
        n_values: List[int],
        digits: int = 40,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        j: Optional[int] = None,
    ) -> List[Section]:
        params_list = [
            resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
            for n in n_values
        ]
        sections = []
        for shift in shifts(params_list[0], j):
            name = f"growth D={D},s={s} j={shift}"
            try:
                with Timer() as timer:
                    report = growth_report(params_list, shift, digits)
            except (PrecisionError, ConditioningError) as e:
                failed = Section(
                    name=name,
                    data={"error": str(e)},
                    checks=[CheckOutcome(name=name, passed=False, detail=str(e))],
                )
                sections.append(publish(context, failed))
                continue
            checks = [
                CheckOutcome.exact(
                    f"positive D={D},s={s},n={row.n} j={shift}",
                    row.positive,
                    f"r = {row.value}",
                )
                for row in report.rows
            ]
            sections.append(
                publish(
                    context,
                    Section(
                        name=name,
                        data=report.to_json(),
                        checks=checks,
                        elapsed=timer.elapsed,
                    ),
                )
            )
        return sections
