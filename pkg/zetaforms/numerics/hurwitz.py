from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

from mpmath.ctx_mp import MPContext

from zetaforms.arith.core import bernoulli
from zetaforms.errors import DomainError, PrecisionError
from zetaforms.numerics.precision import (
    PrecisionValue,
    Residual,
    to_mp,
    working_context,
)

# Corrections are abandoned (and the cutoff doubled) past this many terms.
MAX_CORRECTIONS = 400


def _euler_maclaurin_zeta(ctx: MPContext, q: int, a, tol=None) -> Tuple[object, object]:
    """
    sum_{k>=0} (k+a)^{-q} for real a > 0 and integer q >= 2, returned as
    (value, error) where error is the first omitted Euler-Maclaurin
    correction. The shift a may be large (tails of longer series).
    """
    a = ctx.convert(a)
    if tol is None:
        tol = ctx.eps
    # direct terms until x = N + a is large against the working precision
    cutoff = max(0, int(ctx.ceil(ctx.dps / 2 + 10 - a)))

    for _ in range(8):
        head = ctx.mpf(0)
        for k in range(cutoff):
            head += (k + a) ** (-q)
        x = cutoff + a
        main = head + x ** (1 - q) / (q - 1) + x ** (-q) / 2

        corrections = ctx.mpf(0)
        previous = None
        omitted = None
        for j in range(1, MAX_CORRECTIONS):
            term = (
                to_mp(ctx, bernoulli(2 * j))
                / ctx.factorial(2 * j)
                * ctx.rf(q, 2 * j - 1)
                * x ** (-q - 2 * j + 1)
            )
            if previous is not None and abs(term) > abs(previous):
                break
            if abs(term) <= tol * abs(main):
                omitted = abs(term)
                break
            corrections += term
            previous = term

        if omitted is not None:
            value = main + corrections
            rounding = (cutoff + j + 4) * ctx.eps * abs(value)
            return value, omitted + rounding
        cutoff = 2 * cutoff + 16

    raise PrecisionError(
        f"Euler-Maclaurin for zeta({q}, {ctx.nstr(a, 8)}) did not settle"
    )


def hurwitz_zeta(
    i: int, alpha: Union[int, Fraction], target_digits: int
) -> PrecisionValue:
    """
    zeta(i, alpha) = sum_{k>=0} (k+alpha)^{-i} for 0 < alpha <= 1, accurate to
    10^-target_digits.
    """
    if int(i) != i or i < 2:
        raise DomainError(f"zeta(i, alpha) diverges for i={i}; need i >= 2")
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")

    ctx = working_context(target_digits)
    a = to_mp(ctx, alpha)
    value, error = _euler_maclaurin_zeta(ctx, i, a)
    # rounding of alpha, pushed through d/da zeta(i, a) = -i zeta(i+1, a)
    error += 2 * i * a ** (-i) * ctx.eps
    result = PrecisionValue(ctx, value, error)
    if not result.within(target_digits):
        raise PrecisionError(
            f"zeta({i}, {alpha}) error {ctx.nstr(error, 3)} misses 1e-{target_digits}"
        )
    return result


def divisor_formula_check(d: int, i: int, target_digits: int) -> Residual:
    """sum_{j=1}^{d} zeta(i, j/d) against d^i zeta(i)."""
    if d < 1:
        raise DomainError(f"divisor must be positive, got {d}")
    lhs = hurwitz_zeta(i, Fraction(1, d), target_digits)
    for j in range(2, d + 1):
        lhs = lhs + hurwitz_zeta(i, Fraction(j, d), target_digits)
    rhs = hurwitz_zeta(i, 1, target_digits) * (d**i)
    ctx = rhs.ctx
    return Residual(
        name=f"divisor formula d={d} i={i}",
        residual=lhs.distance(rhs),
        bound=lhs.abs_error + rhs.abs_error,
        tolerance=ctx.mpf(10) ** (-target_digits),
        details={"lhs": lhs.to_json(), "rhs": rhs.to_json()},
    )
