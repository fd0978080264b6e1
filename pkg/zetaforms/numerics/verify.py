"""
Cross-checks between independent evaluations of the same quantity. Every
check returns a Residual; none of them raise on a mismatch.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, List, NamedTuple, Sequence, Union

import numpy as np

from zetaforms.arith.core import factorial, format_rational, pochhammer
from zetaforms.errors import DomainError
from zetaforms.forms.rational_function import Params, build_R, eval_R_exact
from zetaforms.numerics.precision import (
    PrecisionValue,
    Residual,
    RootOfUnity,
    magnitude_digits,
    to_mp,
    working_context,
)
from zetaforms.numerics.series import (
    _resolved_star_sums,
    converge_power_law,
    eval_form_numeric,
    eval_r_direct,
    eval_r_star,
)

if TYPE_CHECKING:
    from zetaforms.forms.linear_forms import HurwitzLinearForm


def eq1_residual(form: HurwitzLinearForm, target_digits: int) -> Residual:
    """Direct series against a0 + sum a_i zeta(i, j/D)."""
    params = form.params
    direct = eval_r_direct(params, form.j, target_digits)
    via_form = eval_form_numeric(form, target_digits)
    ctx = direct.ctx
    return Residual(
        name=f"eq1 {params.label()} j={form.j}",
        residual=direct.distance(via_form),
        bound=direct.abs_error + via_form.abs_error,
        tolerance=ctx.mpf(10) ** (-(target_digits - 5)),
        details={"direct": direct.to_json(), "form": via_form.to_json()},
    )


def theorem1_prefactor(params: Params) -> Fraction:
    """D^{s-1} (3Dn+1)! / n!^{3D}."""
    D, s, n = params.D, params.s, params.n
    return Fraction(D ** (s - 1) * factorial(3 * D * n + 1), factorial(n) ** (3 * D))


def _require_nondegenerate(params: Params, what: str):
    if params.degenerate:
        raise DomainError(
            f"{what} needs n >= 1: for n = 0 the term at m = 0 is not annihilated"
        )


def verify_theorem1(params: Params, j: int, target_digits: int) -> Residual:
    """
    r_{n,j} = D^{s-1} (3Dn+1)!/n!^{3D} sum_{m=1}^{D} xi^{-mj} r*_{n,m}. The
    right side is real; its imaginary part is reported and gated alongside
    the residual.
    """
    _require_nondegenerate(params, "the integral representation")
    D = params.D
    if not 1 <= j <= D:
        raise DomainError(f"j must lie in 1..{D}, got {j}")

    prefactor = theorem1_prefactor(params)
    star_digits = target_digits + magnitude_digits(prefactor) + 2
    ctx = working_context(star_digits)

    combined = PrecisionValue(ctx, 0)
    terms_used = 0
    for m in range(1, D + 1):
        star = eval_r_star(params, m, star_digits)
        terms_used = star.terms_used
        combined = combined + RootOfUnity(ctx, D, -m * j).value * star.value
    rhs = combined * prefactor

    lhs = eval_r_direct(params, j, target_digits)
    return Residual(
        name=f"theorem1 {params.label()} j={j}",
        residual=abs(lhs.value - ctx.re(rhs.value)),
        bound=lhs.abs_error + rhs.abs_error,
        tolerance=ctx.mpf(10) ** (-target_digits),
        imaginary=abs(ctx.im(rhs.value)),
        details={
            "direct": lhs.to_json(),
            "integral": rhs.to_json(),
            "prefactor": format_rational(prefactor),
            "star_digits": star_digits,
            "terms_used": terms_used,
            "heuristic_tail": True,
        },
    )


def d2_integral_check(params: Params, target_digits: int) -> Residual:
    """
    For D = 2, s odd (any n >= 1):
    7 r_{n,2} - r_{n,1} = 2^s (6n+1)!/n!^6 sum_k C(6n+1+k, k) I_k^{s+1} (3 - 4(-1)^k).
    """
    if params.D != 2 or params.s % 2 == 0:
        raise DomainError(f"needs D=2 and odd s, got {params.label()}")
    _require_nondegenerate(params, "the D=2 integral")

    n, s = params.n, params.s
    prefactor = Fraction(2**s * factorial(6 * n + 1), factorial(n) ** 6)
    star_digits = target_digits + magnitude_digits(prefactor) + 2
    partial, tail_bound, ctx = _resolved_star_sums(2, s, n, star_digits)
    # residue 0 collects odd k (weight 7), residue 1 even k (weight -1)
    series = 7 * partial.sums[0] - partial.sums[1]
    error = 7 * (tail_bound + partial.rounding)
    rhs = PrecisionValue(ctx, series, error) * prefactor

    lhs = eval_r_direct(params, 2, target_digits) * 7 - eval_r_direct(
        params, 1, target_digits
    )
    return Residual(
        name=f"d2 integral {params.label()}",
        residual=lhs.distance(rhs),
        bound=lhs.abs_error + rhs.abs_error,
        tolerance=ctx.mpf(10) ** (-target_digits),
        details={
            "combination": lhs.to_json(),
            "integral": rhs.to_json(),
            "terms_used": partial.terms,
            "heuristic_tail": True,
        },
    )


def roots_filter_check(
    params: Params, j: int, x: Union[int, Fraction], target_digits: int
) -> Residual:
    """
    sum_{l = j-1 mod D} (a)_l / l! x^l = (1/D) sum_{m=1}^{D} xi^{-m(j-1)} / (1 - xi^m x)^a
    with a = 3Dn + 2.
    """
    D = params.D
    x = Fraction(x)
    if abs(x) >= 1:
        raise DomainError(f"the filter identity needs |x| < 1, got {x}")
    if not 1 <= j <= D:
        raise DomainError(f"j must lie in 1..{D}, got {j}")

    a = 3 * D * params.n + 2
    ctx = working_context(target_digits)
    goal = ctx.mpf(10) ** (-(target_digits + 2))
    xm = to_mp(ctx, x)

    # u_{l+1} = u_l (a+l)/(l+1) x
    term = ctx.mpf(1)
    lhs = ctx.mpf(0)
    magnitude = ctx.mpf(0)
    l = 0
    while True:
        if l % D == (j - 1) % D:
            lhs += term
            magnitude += abs(term)
        ratio = abs(xm) * (a + l) / (l + 1)
        term = term * (a + l) / (l + 1) * xm
        l += 1
        if ratio < 1:
            tail = abs(term) / (1 - abs(xm) * (a + l) / (l + 1))
            if tail <= goal:
                break
    lhs_error = tail + 3 * (l + 1) * ctx.eps * magnitude

    rhs = ctx.mpf(0)
    rhs_error = ctx.mpf(0)
    for m in range(1, D + 1):
        twiddle = RootOfUnity(ctx, D, -m * (j - 1)).value.value
        root = RootOfUnity(ctx, D, m).value.value
        contribution = twiddle / (1 - root * xm) ** a / D
        rhs += contribution
        rhs_error += (2 * a + 10) * ctx.eps * abs(contribution)

    return Residual(
        name=f"roots filter D={D} n={params.n} j={j} x={format_rational(x)}",
        residual=abs(lhs - ctx.re(rhs)),
        bound=lhs_error + rhs_error,
        tolerance=ctx.mpf(10) ** (-target_digits),
        imaginary=abs(ctx.im(rhs)),
        details={
            "lhs": ctx.nstr(lhs, target_digits),
            "rhs": ctx.nstr(ctx.re(rhs), target_digits),
            "terms": l,
        },
    )


def generating_coefficient_check(params: Params, j: int, terms: int) -> Residual:
    """
    (3Dn+2)_{j-1}/(j-1)! (3Dn+j+1)_{Dk}/(j)_{Dk} = (3Dn+2)_{Dk+j-1}/(Dk+j-1)!
    for k < terms: the coefficients of x^{j-1} f_j(x^D) are exactly the
    filtered binomial coefficients. Exact; the residual counts mismatches.
    """
    D = params.D
    a = 3 * D * params.n + 2
    leading = pochhammer(a, j - 1) / factorial(j - 1)
    mismatches = []
    for k in range(terms):
        lhs = leading * pochhammer(a + j - 1, D * k) / pochhammer(j, D * k)
        rhs = pochhammer(a, D * k + j - 1) / factorial(D * k + j - 1)
        if lhs != rhs:
            mismatches.append(k)
    ctx = working_context(10)
    return Residual(
        name=f"generating coefficients D={D} n={params.n} j={j}",
        residual=ctx.mpf(len(mismatches)),
        bound=ctx.mpf(0),
        tolerance=ctx.mpf(0),
        details={"terms": terms, "mismatches": mismatches},
    )


class HypergeometricParameters(NamedTuple):
    upper: List[Fraction]
    lower: List[Fraction]
    prefactor: Fraction

    def to_json(self) -> dict:
        return {
            "upper": [format_rational(value) for value in self.upper],
            "lower": [format_rational(value) for value in self.lower],
            "prefactor": format_rational(self.prefactor),
        }


def hypergeometric_parameters(params: Params, j: int) -> HypergeometricParameters:
    """
    sum_{k>=0} R(n+k+j/D) = prefactor * sum_k prod (upper)_k / prod (lower)_k,
    with the k! kept apart from lower.
    """
    D, s, n = params.D, params.s, params.n
    if not 1 <= j <= D:
        raise DomainError(f"j must lie in 1..{D}, got {j}")
    shift = Fraction(j, D)
    upper = [3 * n + Fraction(j + l, D) for l in range(1, D + 1)]
    upper += [n + shift] * (s + 1)
    lower = [1 + Fraction(j - l, D) for l in range(1, D + 1) if l != j]
    lower += [2 * n + 1 + shift] * (s + 1)

    numerator = Fraction(factorial(n)) ** (s + 1 - 3 * D)
    for l in range(3 * D * n + 1):
        numerator *= l + j
    denominator = Fraction(D)
    for l in range(n + 1):
        denominator *= (n + l + shift) ** (s + 1)
    return HypergeometricParameters(upper, lower, numerator / denominator)


class _HypergeometricRow:
    def __init__(self, hyper: HypergeometricParameters, ctx):
        self.ctx = ctx
        self.upper = [to_mp(ctx, value) for value in hyper.upper]
        self.lower = [to_mp(ctx, value) for value in hyper.lower]
        self.k = 0
        self.term = to_mp(ctx, hyper.prefactor)
        self.total = ctx.mpf(0)
        self.magnitude = ctx.mpf(0)
        self.last = ctx.mpf(0)
        self.previous = ctx.mpf(0)
        self.steps = len(self.upper) + len(self.lower) + 1

    def advance(self, terms: int):
        while self.k < terms:
            k = self.k
            self.total += self.term
            self.magnitude += abs(self.term)
            self.previous, self.last = self.last, self.term
            ratio = self.ctx.mpf(1)
            for value in self.upper:
                ratio *= k + value
            for value in self.lower:
                ratio /= k + value
            self.term = self.term * ratio / (k + 1)
            self.k += 1

    @property
    def rounding(self):
        return 2 * self.k * self.steps * self.ctx.eps * self.magnitude


def pfq_cross_check(params: Params, j: int, target_digits: int) -> Residual:
    """
    The hypergeometric row summed by term recurrence against the direct
    series. The row is sum_{m>=n} R(m+j/D); for n >= 1 the numerator zeros
    make this r_{n,j}, for n = 0 it also carries the term R(j/D).
    """
    hyper = hypergeometric_parameters(params, j)
    ctx = working_context(target_digits)
    row = _HypergeometricRow(hyper, ctx)
    tail_bound = converge_power_law(
        row,
        params.kappa,
        ctx.mpf(10) ** (-target_digits),
        f"hypergeometric row for {params.label()}, j={j}",
    )
    series = PrecisionValue(ctx, row.total, tail_bound + row.rounding)

    reference = eval_r_direct(params, j, target_digits)
    if params.degenerate:
        R = build_R(params)
        reference = reference + eval_R_exact(R, Fraction(j, params.D))

    return Residual(
        name=f"pfq {params.label()} j={j}",
        residual=series.distance(reference),
        bound=series.abs_error + reference.abs_error,
        tolerance=ctx.mpf(10) ** (-target_digits),
        details={
            "series": series.to_json(),
            "direct": reference.to_json(),
            "terms_used": row.k,
            "heuristic_tail": True,
        },
    )


class GrowthRow(NamedTuple):
    n: int
    value: PrecisionValue
    root: object
    positive: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "value": self.value.to_json(),
            "root": None if self.root is None else self.value.ctx.nstr(self.root, 12),
            "positive": self.positive,
        }


class GrowthReport(NamedTuple):
    rows: List[GrowthRow]
    log_ratios: np.ndarray

    @property
    def all_positive(self) -> bool:
        return all(row.positive for row in self.rows)

    def summary(self) -> dict:
        if self.log_ratios.size == 0:
            return {"points": len(self.rows)}
        return {
            "points": len(self.rows),
            "mean_log_ratio": float(np.mean(self.log_ratios)),
            "min_log_ratio": float(np.min(self.log_ratios)),
            "max_log_ratio": float(np.max(self.log_ratios)),
        }

    def to_json(self) -> dict:
        return {
            "rows": [row.to_json() for row in self.rows],
            "summary": self.summary(),
            "all_positive": self.all_positive,
        }


def growth_report(
    params_list: Sequence[Params], j: int, target_digits: int
) -> GrowthReport:
    """
    r_{n,j} and r_{n,j}^{1/n} for increasing n at fixed (D, s). The summary
    holds per-step log(r_{n'} / r_n) / (n' - n); nothing is asserted about it.
    """
    if not params_list:
        raise DomainError("growth_report needs at least one parameter set")
    first = params_list[0]
    ns = [p.n for p in params_list]
    if any(p.D != first.D or p.s != first.s for p in params_list):
        raise DomainError("growth_report needs a fixed (D, s)")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError(f"n values must increase, got {ns}")

    rows: List[GrowthRow] = []
    for params in params_list:
        value = eval_r_direct(params, j, target_digits)
        ctx = value.ctx
        root = ctx.root(value.value, params.n) if params.n and value.value > 0 else None
        rows.append(GrowthRow(params.n, value, root, value.certainly_positive()))

    logs = np.array(
        [float(row.value.ctx.log(row.value.value)) if row.positive else np.nan for row in rows]
    )
    steps = np.diff(np.array(ns, dtype=float))
    log_ratios = np.diff(logs) / steps if len(rows) > 1 else np.array([])
    if np.isnan(log_ratios).any():
        log_ratios = log_ratios[~np.isnan(log_ratios)]
    return GrowthReport(rows, log_ratios)
