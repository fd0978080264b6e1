"""
Linear forms r_{n,j} = a_{0,j} + sum_{i = s mod 2} a_i zeta(i, j/D), their
integrality certificates, and reductions of integer combinations over j to
forms in ordinary zeta values.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence

from zetaforms.arith.core import LcmValue, divisors, format_rational, lcm_upto, mobius
from zetaforms.errors import (
    DomainError,
    InternalConsistencyError,
    IrreducibleCombinationError,
)
from zetaforms.forms.partial_fractions import (
    PartialFractionTable,
    column_sums,
    decompose,
)
from zetaforms.forms.rational_function import Params, RationalFunctionRep, build_R


class HurwitzLinearForm:
    def __init__(
        self,
        params: Params,
        j: int,
        a0: Fraction,
        a: Dict[int, Fraction],
    ):
        for i in a:
            if i < 2 or i > params.s or (i - params.s) % 2:
                raise InternalConsistencyError(
                    f"a_{i} is outside the parity class of s={params.s}"
                )
        self.params = params
        self.j = j
        self.a0 = Fraction(a0)
        self.a: Dict[int, Fraction] = {i: Fraction(a[i]) for i in sorted(a)}

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.j, self.params.D)

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "alpha": format_rational(self.alpha),
            "a0": format_rational(self.a0),
            "a": {str(i): format_rational(value) for i, value in self.a.items()},
        }

    def __str__(self) -> str:
        terms = [format_rational(self.a0)]
        for i, value in self.a.items():
            terms.append(f"({format_rational(value)})*zeta({i}, {self.alpha})")
        return " + ".join(terms)


class CoefficientWitness(NamedTuple):
    name: str
    multiplier: str
    witness: Optional[int]
    gate: bool

    @property
    def passed(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "multiplier": self.multiplier,
            "witness": None if self.witness is None else str(self.witness),
            "pass": self.passed,
            "gate": self.gate,
        }


class IntegralityCertificate:
    """
    d_n^{s+1-i} a_i and d_{n+1}^{s+1} a_{0,j} must be integers. Entries with
    gate=False (d_n^{s+1} a_{0,j}) are reported but never decide the outcome.
    """

    def __init__(
        self,
        form: HurwitzLinearForm,
        d_n: LcmValue,
        d_n1: LcmValue,
        witnesses: List[CoefficientWitness],
    ):
        self.form = form
        self.d_n = d_n
        self.d_n1 = d_n1
        self.witnesses = witnesses

    @property
    def passed(self) -> bool:
        return all(w.passed for w in self.witnesses if w.gate)

    def failures(self) -> List[str]:
        return [w.name for w in self.witnesses if w.gate and not w.passed]

    def to_json(self) -> dict:
        return {
            "j": self.form.j,
            "d_n": self.d_n.to_json(),
            "d_n1": self.d_n1.to_json(),
            "witnesses": [w.to_json() for w in self.witnesses],
            "pass": self.passed,
        }


class ZetaLinearForm:
    def __init__(
        self,
        params: Params,
        c0: Fraction,
        c: Dict[int, Fraction],
        weights: Dict[int, int],
        divisor_coefficients: Dict[int, int],
    ):
        self.params = params
        self.c0 = Fraction(c0)
        self.c: Dict[int, Fraction] = {i: Fraction(c[i]) for i in sorted(c)}
        self.weights = dict(sorted(weights.items()))
        self.divisor_coefficients = dict(sorted(divisor_coefficients.items()))

    def to_json(self) -> dict:
        return {
            "c0": format_rational(self.c0),
            "c": {str(i): format_rational(value) for i, value in self.c.items()},
            "weights": {str(j): e for j, e in self.weights.items()},
            "divisor_coefficients": {
                str(q): value for q, value in self.divisor_coefficients.items()
            },
        }


class FormSet(NamedTuple):
    R: RationalFunctionRep
    table: PartialFractionTable
    forms: List[HurwitzLinearForm]


def extract_form(table: PartialFractionTable, j: int) -> HurwitzLinearForm:
    params = table.params
    D, s = params.D, params.s
    if not 1 <= j <= D:
        raise DomainError(f"j must lie in 1..{D}, got {j}")

    sums = column_sums(table)
    if sums[1] != 0:
        raise InternalConsistencyError(
            f"simple pole coefficients sum to {sums[1]}, not 0"
        )
    for i, total in sums.items():
        if (i - s) % 2 and total != 0:
            raise InternalConsistencyError(
                f"off-parity column sum at i={i} is {total}, not 0"
            )

    alpha = Fraction(j, D)
    a0 = Fraction(0)
    for l in table.poles:
        # sum_{m>=1} (m+l+alpha)^{-i} = zeta(i, alpha) - sum_{k=0}^{l} (k+alpha)^{-i}
        shifts = [1 / (k + alpha) for k in range(l + 1)]
        powers = [Fraction(1)] * len(shifts)
        for i in table.orders:
            powers = [p * base for p, base in zip(powers, shifts)]
            coefficient = table.coefficient(l, i)
            if coefficient:
                a0 -= coefficient * sum(powers, Fraction(0))

    a = {i: sums[i] for i in range(2, s + 1) if (i - s) % 2 == 0}
    return HurwitzLinearForm(params, j, a0, a)


def certify_integrality(form: HurwitzLinearForm) -> IntegralityCertificate:
    params = form.params
    s, n = params.s, params.n
    # empty lcm for n = 0 is read as d_1 = 1
    d_n = lcm_upto(max(n, 1))
    d_n1 = lcm_upto(n + 1)

    witnesses: List[CoefficientWitness] = []
    for i, value in form.a.items():
        scaled = d_n.value ** (s + 1 - i) * value
        witnesses.append(
            CoefficientWitness(
                name=f"a_{i}",
                multiplier=f"d_{d_n.n}^{s + 1 - i}",
                witness=scaled.numerator if scaled.denominator == 1 else None,
                gate=True,
            )
        )

    scaled = d_n1.value ** (s + 1) * form.a0
    witnesses.append(
        CoefficientWitness(
            name=f"a_0,{form.j}",
            multiplier=f"d_{d_n1.n}^{s + 1}",
            witness=scaled.numerator if scaled.denominator == 1 else None,
            gate=True,
        )
    )
    scaled = d_n.value ** (s + 1) * form.a0
    witnesses.append(
        CoefficientWitness(
            name=f"a_0,{form.j}",
            multiplier=f"d_{d_n.n}^{s + 1}",
            witness=scaled.numerator if scaled.denominator == 1 else None,
            gate=False,
        )
    )
    return IntegralityCertificate(form, d_n, d_n1, witnesses)


def reduce_to_zeta(
    forms: Sequence[HurwitzLinearForm], weights: Sequence[int]
) -> ZetaLinearForm:
    """
    Reduce sum_j e_j r_{n,j} to c0 + sum_i c_i zeta(i). The weights must
    depend on j only through gcd(j, D); they are then written as
    sum_{q | D} c'_q [q | j] and each block sums to (D/q)^i zeta(i) by
    sum_{j=1}^{d} zeta(i, j/d) = d^i zeta(i).
    """
    if not forms:
        raise DomainError("reduce_to_zeta needs one form per j")
    params = forms[0].params
    D = params.D
    by_j = {form.j: form for form in forms}
    if sorted(by_j) != list(range(1, D + 1)) or len(forms) != D:
        raise DomainError(f"expected exactly one form for each j in 1..{D}")
    if any(form.params != params for form in forms):
        raise DomainError("all forms must share the same parameters")
    if len(weights) != D:
        raise DomainError(f"expected {D} weights, got {len(weights)}")

    e = {j: int(weights[j - 1]) for j in range(1, D + 1)}

    by_class: Dict[int, List[int]] = {}
    for j in range(1, D + 1):
        by_class.setdefault(gcd(j, D), []).append(j)
    residual: List[str] = []
    class_weight: Dict[int, int] = {}
    for g, members in sorted(by_class.items()):
        values = {e[j] for j in members}
        if len(values) > 1:
            baseline = e[members[0]]
            for j in members[1:]:
                if e[j] != baseline:
                    residual.append(
                        f"({e[j] - baseline})*zeta(i, {Fraction(j, D)})"
                    )
        class_weight[g] = e[members[0]]
    if residual:
        raise IrreducibleCombinationError(residual)

    # Mobius inversion of f(g) = sum_{q | g} c'_q over the divisor lattice of D
    coefficients = {
        g: sum(mobius(g // q) * class_weight[q] for q in divisors(g))
        for g in divisors(D)
    }

    c0 = sum((e[j] * by_j[j].a0 for j in e), Fraction(0))
    a = forms[0].a
    c = {
        i: value * sum(cq * (D // q) ** i for q, cq in coefficients.items())
        for i, value in a.items()
    }
    return ZetaLinearForm(params, c0, c, e, coefficients)


def build_forms(params: Params) -> FormSet:
    R = build_R(params)
    table = decompose(R)
    forms = [extract_form(table, j) for j in range(1, params.D + 1)]
    return FormSet(R, table, forms)


def d2_special_form(params: Params) -> ZetaLinearForm:
    """The combination 7 r_{n,2} - r_{n,1}, in which zeta(3) cancels."""
    if params.D != 2 or params.s % 2 == 0 or params.s < 5:
        raise DomainError(
            f"the D=2 combination needs D=2 and odd s >= 5, got {params.label()}"
        )
    combination = reduce_to_zeta(build_forms(params).forms, [-1, 7])
    if combination.c.get(3, Fraction(0)) != 0:
        raise InternalConsistencyError(
            f"zeta(3) coefficient of 7r_2 - r_1 is {combination.c[3]}, not 0"
        )
    return combination
