"""
R_n(t) = D^{3Dn} n!^{s+1-3D} prod_{l=0}^{3Dn} (t - n + l/D) / prod_{l=0}^{n} (t+l)^{s+1}

R is kept in factored form (prefactor, numerator roots, poles) and is never
expanded into monomials. Every expansion it needs (local Taylor series at a
pole, the expansion at infinity) is computed from the factors directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from zetaforms.arith.core import factorial, format_rational
from zetaforms.arith.series import (
    Series,
    inverse_power_series,
    series_mul,
    series_mul_linear,
)
from zetaforms.errors import ConditioningError, ParameterError, PoleError
from zetaforms.numerics.precision import PrecisionValue, to_mp
from zetaforms.options.numerics import NumericsOptions

Rational = Union[int, Fraction]


class Params(BaseModel):
    """
    The triple (D, s, n) plus a target precision. Odd n is only admitted
    with allow_odd_n, and only for D = 2 with s odd, where the reflection
    R(-n-t) = (-1)^s R(t) holds for every n.
    """

    model_config = ConfigDict(frozen=True)

    D: int
    s: int
    n: int
    precision_digits: int = 40
    allow_odd_n: bool = False

    @model_validator(mode="after")
    def _check_constraints(self) -> Params:
        if self.D < 1:
            raise ParameterError("D >= 1", f"got D={self.D}")
        if self.s < 1:
            raise ParameterError("s >= 1", f"got s={self.s}")
        if self.n < 0:
            raise ParameterError("n >= 0", f"got n={self.n}")
        if self.s < 3 * self.D - 1:
            raise ParameterError(
                "s >= 3D-1", f"got s={self.s}, D={self.D}"
            )
        if self.n % 2 == 1:
            if not self.allow_odd_n:
                raise ParameterError("n even", f"got n={self.n}")
            if self.D != 2 or self.s % 2 == 0:
                raise ParameterError(
                    "odd n only for D=2 with s odd",
                    f"got D={self.D}, s={self.s}",
                )
        if self.precision_digits < 10:
            raise ParameterError(
                "precision_digits >= 10", f"got {self.precision_digits}"
            )
        return self

    @property
    def kappa(self) -> int:
        """Decay exponent of R at infinity: (n+1)(s+1) - (3Dn+1)."""
        return (self.n + 1) * (self.s + 1) - (3 * self.D * self.n + 1)

    @property
    def degenerate(self) -> bool:
        return self.n == 0

    @property
    def reflection_sign(self) -> int:
        """Sign in R(-n-t) = sign * R(t), read off the factor degrees."""
        exponent = 3 * self.D * self.n + 1 + (self.n + 1) * (self.s + 1)
        return -1 if exponent % 2 else 1

    def label(self) -> str:
        return f"D={self.D},s={self.s},n={self.n}"

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "s": self.s,
            "n": self.n,
            "precision_digits": self.precision_digits,
            "kappa": self.kappa,
            "degenerate": self.degenerate,
        }


class RationalFunctionRep:
    def __init__(
        self,
        params: Params,
        prefactor: Fraction,
        numerator_roots: Sequence[Fraction],
    ):
        self.params = params
        self.prefactor = prefactor
        self.numerator_roots: Tuple[Fraction, ...] = tuple(numerator_roots)
        self.poles: Tuple[int, ...] = tuple(range(params.n + 1))
        self.pole_order = params.s + 1

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator_roots)

    @property
    def denominator_degree(self) -> int:
        return self.pole_order * len(self.poles)

    def is_pole(self, t: Rational) -> bool:
        t = Fraction(t)
        return t.denominator == 1 and -self.params.n <= t <= 0

    def local_series(self, l: int, order: int) -> Series:
        """
        Taylor coefficients of R(t)(t+l)^{s+1} in powers of u = t + l, up to
        u^{order-1}, exact.
        """
        if l not in self.poles:
            raise ValueError(f"-{l} is not a pole of R")
        out: Series = [self.prefactor] + [0] * (order - 1)
        for root in self.numerator_roots:
            # t - root = u - (l + root)
            out = series_mul_linear(out, -(l + root), 1, order)
        for other in self.poles:
            if other != l:
                out = series_mul(
                    out,
                    inverse_power_series(other - l, self.pole_order, order),
                    order,
                )
        return [Fraction(c) for c in out]

    def expansion_at_infinity(self, order: int) -> List[Fraction]:
        """
        Coefficients c_p with R(T) = prefactor * T^{-kappa} * sum_p c_p T^{-p}
        for |T| > n, i.e. the series of
        g(u) = prod_k (1 - rho_k u) / prod_{l=1}^{n} (1 + l u)^{s+1}.
        """
        D = self.params.D
        # (1 - rho u) with rho = n - k/D, scaled by D to stay integral
        out: Series = [1] + [0] * (order - 1)
        for root in self.numerator_roots:
            scaled = root * D
            out = series_mul_linear(out, D, -int(scaled), order)
        for l in self.poles[1:]:
            inverse = [
                (-1) ** k * comb(self.pole_order + k - 1, k) * l**k
                for k in range(order)
            ]
            out = series_mul(out, inverse, order)
        scale = D ** len(self.numerator_roots)
        return [Fraction(c, scale) for c in out]

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "prefactor": format_rational(self.prefactor),
            "numerator_roots": [format_rational(r) for r in self.numerator_roots],
            "poles": [-l for l in self.poles],
            "pole_order": self.pole_order,
        }


def build_R(params: Params) -> RationalFunctionRep:
    D, s, n = params.D, params.s, params.n
    prefactor = Fraction(D ** (3 * D * n) * factorial(n) ** (s + 1 - 3 * D))
    # roots of (t - n + l/D) are n - l/D; listed ascending
    roots = [Fraction(-2 * n * D + l, D) for l in range(3 * D * n + 1)]
    R = RationalFunctionRep(params, prefactor, roots)
    if R.numerator_degree >= R.denominator_degree - 1:
        raise ParameterError(
            "numerator degree <= denominator degree - 2",
            f"{R.numerator_degree} vs {R.denominator_degree}",
        )
    return R


def eval_R_exact(R: RationalFunctionRep, t: Rational) -> Fraction:
    t = Fraction(t)
    if R.is_pole(t):
        raise PoleError(f"t={t} is a pole of R")
    numerator = R.prefactor
    for root in R.numerator_roots:
        numerator *= t - root
        if not numerator:
            return Fraction(0)
    denominator = Fraction(1)
    for l in R.poles:
        denominator *= (t + l) ** R.pole_order
    return numerator / denominator


def eval_R_float(R: RationalFunctionRep, t: PrecisionValue) -> PrecisionValue:
    ctx = t.ctx
    x = t.value
    divisor = NumericsOptions.pole_threshold_divisor()
    threshold = ctx.mpf(10) ** (-(int(ctx.dps) // divisor))
    nearest = min(abs(x + l) for l in R.poles)
    if nearest <= threshold:
        raise ConditioningError(
            f"t is within {ctx.nstr(nearest, 3)} of a pole of R"
        )

    factors = [x - to_mp(ctx, root) for root in R.numerator_roots]
    shifted = [x + l for l in R.poles]
    value = to_mp(ctx, R.prefactor)
    for factor in factors:
        value *= factor
    denominator = ctx.mpf(1)
    for term in shifted:
        denominator *= term**R.pole_order
    value /= denominator

    operations = 2 * len(factors) + len(shifted) * (R.pole_order + 1) + 2
    error = operations * ctx.eps * abs(value)

    if t.abs_error:
        zeros = [k for k, factor in enumerate(factors) if factor == 0]
        if not zeros:
            log_derivative = sum(1 / factor for factor in factors) - R.pole_order * sum(
                1 / term for term in shifted
            )
            derivative = value * log_derivative
        elif len(zeros) == 1:
            derivative = to_mp(ctx, R.prefactor) / denominator
            for k, factor in enumerate(factors):
                if k != zeros[0]:
                    derivative *= factor
        else:
            derivative = ctx.mpf(0)
        # first order propagation of the input error
        error += abs(derivative) * t.abs_error
    return PrecisionValue(ctx, value, error)


def check_symmetry(R: RationalFunctionRep, sample_points: Sequence[Rational]) -> bool:
    """
    True iff R(-n-t) = (-1)^s R(t) exactly at every sample point.
    """
    sign = -1 if R.params.s % 2 else 1
    n = R.params.n
    for t in sample_points:
        t = Fraction(t)
        reflected = -n - t
        if R.is_pole(t) or R.is_pole(reflected):
            raise PoleError(f"sample {t} or its reflection {reflected} is a pole")
        if eval_R_exact(R, reflected) != sign * eval_R_exact(R, t):
            return False
    return True


def zero_points(params: Params) -> List[Fraction]:
    """The zeros t = m - (D-j)/D, m = 1..n, j = 1..D."""
    D = params.D
    return [
        Fraction(m * D - (D - j), D)
        for m in range(1, params.n + 1)
        for j in range(1, D + 1)
    ]
