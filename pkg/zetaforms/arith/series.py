"""
Truncated exact power series. A series is a list of coefficients
[c_0, c_1, ..., c_{order-1}] of u^0..u^{order-1}; every operation truncates
to the requested order.
"""

from fractions import Fraction
from math import comb
from typing import Iterable, List, Sequence, Union

from zetaforms.errors import DomainError

Coefficient = Union[int, Fraction]
Series = List[Coefficient]


def series_mul(a: Sequence[Coefficient], b: Sequence[Coefficient], order: int) -> Series:
    out: Series = [0] * order
    for i, ai in enumerate(a[:order]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_mul_linear(a: Sequence[Coefficient], c0: Coefficient, c1: Coefficient, order: int) -> Series:
    """Multiply a series by the linear factor (c0 + c1*u)."""
    out: Series = [0] * order
    for i in range(order):
        value = c0 * a[i] if i < len(a) else 0
        if i > 0 and i - 1 < len(a):
            value += c1 * a[i - 1]
        out[i] = value
    return out


def inverse_power_series(d: Coefficient, exponent: int, order: int) -> Series:
    """
    (d + u)^(-exponent) = d^(-exponent) * sum_k (-1)^k C(exponent+k-1, k) (u/d)^k
    """
    if d == 0:
        raise DomainError("inverse_power_series needs a nonzero constant term")
    d = Fraction(d)
    base = 1 / d**exponent
    out: Series = []
    for k in range(order):
        coefficient = comb(exponent + k - 1, k) * base / d**k
        out.append(-coefficient if k % 2 else coefficient)
    return out


def series_product(factors: Iterable[Sequence[Coefficient]], order: int) -> Series:
    out: Series = [1] + [0] * (order - 1)
    for factor in factors:
        out = series_mul(out, factor, order)
    return out
