"""
The two series behind r_{n,j}: the direct sum of R over m + j/D, and the
series of Beta factors whose residue sums give r*_{n,m}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, List, NamedTuple, Tuple

from mpmath.ctx_mp import MPContext

from zetaforms.arith.core import factorial
from zetaforms.errors import (
    DomainError,
    InternalConsistencyError,
    PrecisionError,
)
from zetaforms.forms.rational_function import Params, build_R, eval_R_float
from zetaforms.numerics.hurwitz import _euler_maclaurin_zeta, hurwitz_zeta
from zetaforms.numerics.precision import (
    PrecisionValue,
    RootOfUnity,
    magnitude_digits,
    to_mp,
    working_context,
)
from zetaforms.options.numerics import NumericsOptions

if TYPE_CHECKING:
    from zetaforms.forms.linear_forms import HurwitzLinearForm


def direct_cutoff(params: Params) -> int:
    """First m summed through the expansion of R at infinity."""
    return max(8 * params.n, 16)


def _expansion_majorant(params: Params) -> Fraction:
    """
    Bound for |g| on |u| = 1/(2n), where
    R(T) = prefactor * T^{-kappa} * g(1/T). Cauchy's estimate then gives
    |c_p| <= M (2n)^p for the expansion coefficients.
    """
    n, D = params.n, params.D
    radius = Fraction(1, 2 * n)
    bound = Fraction(1)
    for l in range(3 * D * n + 1):
        bound *= 1 + abs(Fraction(n * D - l, D)) * radius
    for l in range(1, n + 1):
        bound /= (1 - l * radius) ** (params.s + 1)
    return bound


def eval_r_direct(params: Params, j: int, target_digits: int) -> PrecisionValue:
    """
    r_{n,j} = sum_{m>=1} R(m + j/D). Terms below the cutoff N are summed
    directly; the rest is prefactor * sum_p c_p zeta(kappa + p, N + j/D),
    truncated where the Cauchy estimate on the c_p drops below target.
    """
    D, n = params.D, params.n
    if not 1 <= j <= D:
        raise DomainError(f"j must lie in 1..{D}, got {j}")
    R = build_R(params)
    kappa = params.kappa
    alpha = Fraction(j, D)
    cutoff = direct_cutoff(params)
    shift = cutoff + alpha

    majorant = _expansion_majorant(params) if n else Fraction(1)
    extra = magnitude_digits(R.prefactor * majorant)
    ctx = working_context(target_digits, extra)
    goal = ctx.mpf(10) ** (-(target_digits + 2))
    prefactor = to_mp(ctx, R.prefactor)

    if n:
        x = to_mp(ctx, Fraction(2 * n) / shift)
        scale = (
            abs(prefactor)
            * 2
            * to_mp(ctx, majorant)
            * to_mp(ctx, shift) ** (1 - kappa)
            / (1 - x)
        )
        order = max(1, int(ctx.ceil(ctx.log(scale / goal) / -ctx.log(x))))
        truncation = scale * x**order / abs(prefactor)
    else:
        # g == 1: the tail is exactly prefactor * zeta(kappa, N + alpha)
        order = 1
        truncation = ctx.mpf(0)

    head = PrecisionValue(ctx, 0)
    for m in range(1, cutoff):
        head = head + eval_R_float(R, PrecisionValue.exact(ctx, m + alpha))

    coefficients = R.expansion_at_infinity(order)
    shifted = to_mp(ctx, shift)
    tail = ctx.mpf(0)
    tail_error = ctx.mpf(0)
    magnitude = ctx.mpf(0)
    for p, coefficient in enumerate(coefficients):
        if not coefficient:
            continue
        zeta, zeta_error = _euler_maclaurin_zeta(ctx, kappa + p, shifted)
        c = to_mp(ctx, coefficient)
        term = c * zeta
        tail += term
        magnitude += abs(term)
        tail_error += abs(c) * zeta_error + (kappa + p + 2) * ctx.eps * abs(term)
    tail_error += (order + 2) * ctx.eps * magnitude

    tail_value = PrecisionValue(
        ctx,
        prefactor * tail,
        abs(prefactor) * (tail_error + truncation) + ctx.eps * abs(prefactor * tail),
    )
    result = head + tail_value
    if not result.within(target_digits):
        raise PrecisionError(
            f"direct series for {params.label()}, j={j} reached error "
            f"{ctx.nstr(result.abs_error, 3)}; a larger cutoff than N={cutoff} is needed"
        )
    return result


def eval_form_numeric(form: HurwitzLinearForm, target_digits: int) -> PrecisionValue:
    """a0 + sum_i a_i zeta(i, j/D) with propagated error."""
    largest = max([abs(form.a0)] + [abs(value) for value in form.a.values()])
    extra = magnitude_digits(largest)
    ctx = working_context(target_digits, extra)
    total = PrecisionValue.exact(ctx, form.a0)
    for i, value in form.a.items():
        total = total + hurwitz_zeta(i, form.alpha, target_digits + extra) * value
    return total


def beta_factor(params: Params, k: int) -> Fraction:
    """
    I_k = int_0^1 x^{Dn+k} (1 - x^D)^n dx = n! D^n / prod_{r=0}^{n} (Dn+k+1+rD).
    """
    if k < 0:
        raise DomainError(f"beta_factor needs k >= 0, got {k}")
    D, n = params.D, params.n
    denominator = 1
    for r in range(n + 1):
        denominator *= D * n + k + 1 + r * D
    return Fraction(factorial(n) * D**n, denominator)


class StarPartialSums(NamedTuple):
    """Residue sums S_c = sum_{k < terms, (k+1) = c mod D} t_k."""

    sums: Tuple
    terms: int
    last_term: object
    previous_term: object
    rounding: object

    @property
    def total(self):
        return sum(self.sums)


class StarIntegralValue:
    def __init__(
        self,
        params: Params,
        m: int,
        value: PrecisionValue,
        terms_used: int,
        tail_bound,
    ):
        self.params = params
        self.m = m
        self.value = value
        self.terms_used = terms_used
        self.tail_bound = tail_bound

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "value": self.value.to_json(),
            "terms_used": self.terms_used,
            "tail_bound": self.value.ctx.nstr(self.tail_bound, 3),
            "heuristic_tail": True,
        }


class _BetaSeries:
    """
    Ascending, resumable summation of t_k = C(3Dn+1+k, k) I_k^{s+1}, split
    by the residue of k+1 mod D.
    """

    def __init__(self, params: Params, ctx: MPContext):
        self.params = params
        self.ctx = ctx
        self.k = 0
        self.binomial = ctx.mpf(1)
        self.numerator = ctx.mpf(factorial(params.n) * params.D**params.n)
        self.sums: List = [ctx.mpf(0)] * params.D
        self.magnitude = ctx.mpf(0)
        self.last = ctx.mpf(0)
        self.previous = ctx.mpf(0)

    def advance(self, terms: int):
        D, s, n = self.params.D, self.params.s, self.params.n
        top = 3 * D * n + 1
        while self.k < terms:
            k = self.k
            denominator = self.ctx.mpf(1)
            for r in range(n + 1):
                denominator *= D * n + k + 1 + r * D
            term = self.binomial * (self.numerator / denominator) ** (s + 1)
            self.sums[(k + 1) % D] += term
            self.magnitude += term
            self.previous, self.last = self.last, term
            self.binomial = self.binomial * (top + k + 1) / (k + 1)
            self.k += 1

    @property
    def total(self):
        return sum(self.sums)

    @property
    def rounding(self):
        p = self.params
        return 2 * (self.k + (p.s + 2) * (p.n + 4)) * self.ctx.eps * self.magnitude

    def partial(self) -> StarPartialSums:
        return StarPartialSums(
            tuple(self.sums), self.k, self.last, self.previous, self.rounding
        )


def converge_power_law(series, kappa: int, tolerance, label: str):
    """
    Doubles the cutoff K of a series whose terms decay like k^{-kappa} until
    the envelope bound 2 t_K K / (kappa - 1) is below tolerance, terms are
    decreasing at K, and the last doubling moved the sum by less than the
    previous bound. Returns the accepted tail bound.
    """
    if kappa < 2:
        raise InternalConsistencyError(f"{label}: decay exponent {kappa} < 2")
    cutoff = NumericsOptions.initial_terms()
    budget = NumericsOptions.term_budget()
    previous_total = None
    previous_bound = None
    while True:
        series.advance(cutoff)
        bound = 2 * abs(series.last) * cutoff / (kappa - 1)
        total = series.total
        settled = (
            previous_total is not None
            and abs(series.last) <= abs(series.previous)
            and bound <= tolerance
            and abs(total - previous_total) <= previous_bound
        )
        if settled:
            return bound
        previous_total, previous_bound = total, bound
        if cutoff * 2 > budget:
            raise PrecisionError(
                f"{label}: tail bound {series.ctx.nstr(bound, 3)} still above "
                f"{series.ctx.nstr(tolerance, 3)} at the term budget {budget}"
            )
        cutoff *= 2


def star_series(params: Params, terms: int, ctx: MPContext) -> StarPartialSums:
    series = _BetaSeries(params, ctx)
    series.advance(terms)
    return series.partial()


def _resolved_star_sums(
    D: int, s: int, n: int, target_digits: int
) -> Tuple[StarPartialSums, object, MPContext]:
    settings = NumericsOptions.series_settings()
    return _converged_star_sums(D, s, n, target_digits, settings)


@lru_cache(maxsize=64)
def _converged_star_sums(
    D: int, s: int, n: int, target_digits: int, settings: Tuple[int, int, int]
) -> Tuple[StarPartialSums, object, MPContext]:
    # settings only keys the cache; the series reads the same options below
    params = Params(D=D, s=s, n=n, allow_odd_n=n % 2 == 1)
    ctx = working_context(target_digits)
    series = _BetaSeries(params, ctx)
    tail_bound = converge_power_law(
        series,
        params.kappa,
        ctx.mpf(10) ** (-target_digits),
        f"Beta series for {params.label()}",
    )
    return series.partial(), tail_bound, ctx


def eval_r_star(params: Params, m: int, target_digits: int) -> StarIntegralValue:
    """
    r*_{n,m} = sum_k C(3Dn+1+k, k) xi^{m(k+1)} I_k^{s+1}. The term sequence
    does not depend on m, so the residue sums are computed once per
    (D, s, n, digits) and recombined for every m.
    """
    D = params.D
    if not 1 <= m <= D:
        raise DomainError(f"m must lie in 1..{D}, got {m}")
    if params.kappa < 2:
        raise InternalConsistencyError(f"decay exponent {params.kappa} < 2")
    partial, tail_bound, ctx = _resolved_star_sums(
        D, params.s, params.n, target_digits
    )
    value = PrecisionValue(ctx, 0, tail_bound + partial.rounding)
    for c, residue_sum in enumerate(partial.sums):
        root = RootOfUnity(ctx, D, m * c).value
        value = value + root * PrecisionValue(ctx, residue_sum, 0)
    return StarIntegralValue(params, m, value, partial.terms, tail_bound)
