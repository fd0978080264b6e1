from fractions import Fraction
from typing import List, Optional

from zetaforms.arith.core import format_rational
from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.checks.example import Example
from zetaforms.errors import DomainError
from zetaforms.forms.linear_forms import (
    build_forms,
    certify_integrality,
    d2_special_form,
    reduce_to_zeta,
)
from zetaforms.forms.partial_fractions import (
    column_sums,
    parity_profile,
    reflection_holds,
)
from zetaforms.forms.rational_function import check_symmetry
from zetaforms.reports.report import CheckOutcome, Section, resolve_params
from zetaforms.toolbox.common import params_arguments, publish
from zetaforms.utils.timer import Timer

# away from every pole and every reflected pole
SYMMETRY_SAMPLES = [Fraction(1, 3), Fraction(-5, 7), Fraction(7, 2), Fraction(-11, 4)]


class FormCheck(Check):
    """
    Builds R, decomposes it, extracts every r_{n,j} and certifies the
    integrality of its coefficients. Everything is exact.
    """

    def __init__(self):
        super().__init__(
            name="form",
            description=(
                "Build R, decompose it exactly into partial fractions, extract "
                "the linear forms r_{n,j} = a_{0,j} + sum a_i zeta(i, j/D) and "
                "certify that d_n^{s+1-i} a_i and d_{n+1}^{s+1} a_{0,j} are "
                "integers."
            ),
            args=params_arguments(),
            func=self.build,
            examples=[
                Example(
                    name="D=2",
                    args={"D": 2, "s": 5, "n": 2, "json": True},
                    output="a_{0,1}, a_{0,2}, a_3, a_5 and passing certificates",
                )
            ],
        )

    def build(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 40,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        with Timer() as timer:
            R, table, forms = build_forms(params)
            certificates = [certify_integrality(form) for form in forms]
            parity = parity_profile(table)
            sums = column_sums(table)

        context["poles"] = len(table.poles)
        label = params.label()
        checks = [
            CheckOutcome.exact(
                f"simple poles cancel {label}",
                sums[1] == 0,
                f"sum_l A[l][1] = {format_rational(sums[1])}",
            ),
            CheckOutcome.exact(
                f"off-parity columns vanish {label}",
                all(ok for i, ok in parity.items() if (i - s) % 2),
            ),
            CheckOutcome.exact(
                f"reflection A[n-l][i] = +-(-1)^i A[l][i] {label}",
                reflection_holds(table),
            ),
            CheckOutcome.exact(
                f"R(-n-t) = (-1)^s R(t) {label}",
                check_symmetry(R, SYMMETRY_SAMPLES),
            ),
        ]
        checks += [CheckOutcome.from_certificate(c) for c in certificates]

        section = Section(
            name=f"form {label}",
            data={
                "params": params.to_json(),
                "R": R.to_json(),
                "table": table.to_json(),
                "column_sums": {str(i): format_rational(v) for i, v in sums.items()},
                "forms": [form.to_json() for form in forms],
                "certificates": [c.to_json() for c in certificates],
            },
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)


class CombineCheck(Check):
    """
    Integer combinations sum_j e_j r_{n,j} reduced to forms in ordinary zeta
    values. Without weights and for D=2, the combination 7 r_{n,2} - r_{n,1}
    in which zeta(3) cancels.
    """

    def __init__(self):
        super().__init__(
            name="combine",
            description=(
                "Reduce sum_j e_j r_{n,j} to c0 + sum c_i zeta(i). The weights "
                "must depend on j only through gcd(j, D). Without --weights "
                "and for D=2, s odd, reduces 7 r_{n,2} - r_{n,1} and checks "
                "that c_3 = 0 and c_5 = (8 - 2^5) a_5."
            ),
            args=params_arguments()
            + [
                Argument(
                    "weights",
                    "Integer weights e_1,...,e_D, e.g. -1,7",
                    "list[int]",
                )
            ],
            func=self.combine,
            examples=[
                Example(
                    name="zeta(3) elimination",
                    args={"D": 2, "s": 5, "n": 2, "weights": "-1,7"},
                    output='c_3 = "0"',
                )
            ],
        )

    def combine(
        self,
        context: Context,
        D: int,
        s: int,
        n: int,
        digits: int = 40,
        allow_odd_n: bool = False,
        allow_degenerate_n: bool = False,
        weights: Optional[List[int]] = None,
    ) -> Section:
        params = resolve_params(D, s, n, digits, allow_odd_n, allow_degenerate_n)
        label = params.label()
        with Timer() as timer:
            forms = build_forms(params).forms
            if weights is None:
                if D != 2:
                    raise DomainError("combine needs --weights unless D=2")
                combination = d2_special_form(params)
            else:
                combination = reduce_to_zeta(forms, weights)
        a = forms[0].a

        checks = []
        if D == 2 and list(combination.weights.values()) == [-1, 7]:
            checks.append(
                CheckOutcome.exact(
                    f"c_3 = 0 {label}",
                    combination.c.get(3, Fraction(0)) == 0,
                    f"c_3 = {format_rational(combination.c.get(3, Fraction(0)))}",
                )
            )
            if 5 in a:
                checks.append(
                    CheckOutcome.exact(
                        f"c_5 = (8 - 2^5) a_5 {label}",
                        combination.c[5] == (8 - 2**5) * a[5],
                    )
                )

        section = Section(
            name=f"combine {label}",
            data={
                "params": params.to_json(),
                "combination": combination.to_json(),
                "a": {str(i): format_rational(v) for i, v in a.items()},
            },
            checks=checks,
            elapsed=timer.elapsed,
        )
        return publish(context, section)
