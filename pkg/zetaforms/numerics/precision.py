"""
PrecisionValue carries an arbitrary precision real or complex value together
with a running absolute error bound. Each computation works inside its own
mpmath MPContext so concurrent tasks never share a working precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Optional, Union

import mpmath
from mpmath.ctx_mp import MPContext

from zetaforms.options.numerics import NumericsOptions

Number = Union[int, Fraction, "PrecisionValue"]


def working_context(target_digits: int, extra_digits: int = 0) -> MPContext:
    """
    A private mpmath context at target + guard + extra decimal digits.
    """
    ctx = MPContext()
    ctx.dps = target_digits + NumericsOptions.guard_digits() + max(0, extra_digits)
    return ctx


def to_mp(ctx: MPContext, value: Union[int, Fraction]):
    value = Fraction(value)
    if value.denominator == 1:
        return ctx.mpf(value.numerator)
    return ctx.mpf(value.numerator) / value.denominator


def magnitude_digits(value: Union[int, Fraction]) -> int:
    """ceil(log10(|value|)), clamped at zero; exact for rationals."""
    value = abs(Fraction(value))
    if value <= 1:
        return 0
    digits = len(str(value.numerator)) - len(str(value.denominator)) + 1
    return max(0, digits)


class PrecisionValue:
    def __init__(self, ctx: MPContext, value: Any, abs_error: Any = 0):
        self.ctx = ctx
        self.value = ctx.convert(value)
        self.abs_error = ctx.mpf(abs(ctx.convert(abs_error)))

    @classmethod
    def exact(cls, ctx: MPContext, value: Union[int, Fraction]) -> PrecisionValue:
        """A rational converted at ctx precision; the rounding is the error."""
        converted = to_mp(ctx, value)
        return cls(ctx, converted, ctx.eps * abs(converted))

    @property
    def is_complex(self) -> bool:
        return isinstance(self.value, self.ctx.mpc)

    def _coerce(self, other: Number):
        if isinstance(other, PrecisionValue):
            ctx = self.ctx if self.ctx.prec >= other.ctx.prec else other.ctx
            return ctx, ctx.convert(other.value), ctx.convert(other.abs_error)
        if isinstance(other, Fraction):
            converted = to_mp(self.ctx, other)
            return self.ctx, converted, self.ctx.eps * abs(converted)
        return self.ctx, self.ctx.convert(other), self.ctx.mpf(0)

    def __add__(self, other: Number) -> PrecisionValue:
        ctx, value, error = self._coerce(other)
        total = ctx.convert(self.value) + value
        return PrecisionValue(
            ctx, total, self.abs_error + error + ctx.eps * abs(total)
        )

    __radd__ = __add__

    def __neg__(self) -> PrecisionValue:
        return PrecisionValue(self.ctx, -self.value, self.abs_error)

    def __sub__(self, other: Number) -> PrecisionValue:
        ctx, value, error = self._coerce(other)
        total = ctx.convert(self.value) - value
        return PrecisionValue(
            ctx, total, self.abs_error + error + ctx.eps * abs(total)
        )

    def __rsub__(self, other: Number) -> PrecisionValue:
        return (-self) + other

    def __mul__(self, other: Number) -> PrecisionValue:
        ctx, value, error = self._coerce(other)
        mine = ctx.convert(self.value)
        product = mine * value
        bound = (
            abs(mine) * error
            + abs(value) * self.abs_error
            + error * self.abs_error
            + ctx.eps * abs(product)
        )
        return PrecisionValue(ctx, product, bound)

    __rmul__ = __mul__

    def within(self, target_digits: int) -> bool:
        return self.abs_error <= self.ctx.mpf(10) ** (-target_digits)

    def certainly_positive(self) -> bool:
        if self.is_complex:
            return False
        return self.value - self.abs_error > 0

    def distance(self, other: PrecisionValue):
        """|self - other| as a plain mpf in the finer of the two contexts."""
        ctx, value, _ = self._coerce(other)
        return abs(ctx.convert(self.value) - value)

    def agrees_with(self, other: PrecisionValue, slack: Any = 0) -> bool:
        _, _, error = self._coerce(other)
        return self.distance(other) <= self.abs_error + error + slack

    def to_json(self, digits: Optional[int] = None) -> Dict[str, str]:
        digits = digits or max(10, int(self.ctx.dps) - NumericsOptions.guard_digits())
        if self.is_complex:
            out = {
                "re": self.ctx.nstr(self.ctx.re(self.value), digits),
                "im": self.ctx.nstr(self.ctx.im(self.value), digits),
            }
        else:
            out = {"value": self.ctx.nstr(self.value, digits)}
        out["err"] = self.ctx.nstr(self.abs_error, 3)
        return out

    def __str__(self) -> str:
        data = self.to_json()
        if "value" in data:
            return f"{data['value']} ± {data['err']}"
        return f"({data['re']}) + ({data['im']})i ± {data['err']}"

    def __repr__(self) -> str:
        return f"PrecisionValue({self})"


class RootOfUnity:
    """
    xi_D^m for the primitive root xi_D = exp(2 pi i / D). D in {1, 2} is
    exact; other degrees are evaluated at ctx precision.
    """

    def __init__(self, ctx: MPContext, D: int, m: int):
        if D < 1:
            raise ValueError("root of unity degree must be positive")
        self.D = D
        self.m = m % D
        if D == 1:
            self.value = PrecisionValue(ctx, ctx.mpf(1), 0)
        elif D == 2:
            self.value = PrecisionValue(ctx, ctx.mpf(-1 if self.m else 1), 0)
        elif self.m == 0:
            self.value = PrecisionValue(ctx, ctx.mpf(1), 0)
        else:
            point = ctx.expjpi(ctx.mpf(2 * self.m) / D)
            self.value = PrecisionValue(ctx, point, 4 * ctx.eps)

    @property
    def exact(self) -> bool:
        return self.D <= 2 or self.m == 0

    def power(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.value.ctx, self.D, self.m * k)

    def on_unit_circle(self) -> bool:
        return abs(abs(self.value.value) - 1) <= 2 * self.value.abs_error + self.value.ctx.eps

    def to_json(self) -> dict:
        return {"D": self.D, "m": self.m, "value": self.value.to_json()}


class Residual:
    """Outcome of a numerical cross-check: |lhs - rhs| against a bound."""

    def __init__(
        self,
        name: str,
        residual: Any,
        bound: Any,
        tolerance: Any,
        details: Optional[Dict[str, Any]] = None,
        imaginary: Any = None,
    ):
        self.name = name
        self.residual = residual
        self.bound = bound
        self.tolerance = tolerance
        self.imaginary = imaginary
        self.details = details or {}

    @property
    def passed(self) -> bool:
        if self.residual > self.bound + self.tolerance:
            return False
        if self.imaginary is not None and self.imaginary > self.bound + self.tolerance:
            return False
        return True

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "residual": mpmath.nstr(self.residual, 3),
            "bound": mpmath.nstr(self.bound, 3),
            "tolerance": mpmath.nstr(self.tolerance, 3),
            "pass": self.passed,
        }
        if self.imaginary is not None:
            out["imaginary"] = mpmath.nstr(self.imaginary, 3)
        if self.details:
            out["details"] = self.details
        return out

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: residual {self.to_json()['residual']} [{status}]"
