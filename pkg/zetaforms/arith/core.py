"""Exact integer and rational building blocks shared by every module."""

from __future__ import annotations

import math
from fractions import Fraction
from threading import Lock
from typing import List, Union

from pydantic import BaseModel, ConfigDict, model_validator

from zetaforms.errors import DomainError

ExactInt = int
ExactRational = Fraction

RationalLike = Union[int, Fraction]


class LcmValue(BaseModel):
    """d_n = lcm(1, 2, ..., n)."""

    model_config = ConfigDict(frozen=True)

    n: int
    value: int

    @model_validator(mode="after")
    def _check(self) -> LcmValue:
        if self.n < 1:
            raise ValueError("lcm is defined here for n >= 1")
        return self

    def to_json(self) -> dict:
        return {"n": self.n, "value": str(self.value)}


def factorial(k: int) -> ExactInt:
    if k < 0:
        raise DomainError(f"factorial of negative integer {k}")
    return math.factorial(k)


def binomial(a: int, b: int) -> ExactInt:
    if a < 0 or b < 0:
        raise DomainError(f"binomial({a}, {b}) needs nonnegative arguments")
    if b > a:
        raise DomainError(f"binomial({a}, {b}) needs b <= a")
    return math.comb(a, b)


def pochhammer(a: RationalLike, k: int) -> ExactRational:
    """Rising factorial a(a+1)...(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError(f"pochhammer length must be nonnegative, got {k}")
    a = Fraction(a)
    result = Fraction(1)
    for offset in range(k):
        result *= a + offset
    return result


_lcm_lock = Lock()
_lcm_table: List[int] = [1, 1]


def lcm_upto(n: int) -> LcmValue:
    if n < 1:
        raise DomainError(f"lcm_upto needs n >= 1, got {n}")
    with _lcm_lock:
        while len(_lcm_table) <= n:
            k = len(_lcm_table)
            _lcm_table.append(math.lcm(_lcm_table[-1], k))
        value = _lcm_table[n]
    return LcmValue(n=n, value=value)


_bernoulli_lock = Lock()
# B_0, B_1, ... under the B_1 = -1/2 convention
_bernoulli_table: List[Fraction] = [Fraction(1)]


def bernoulli_sequence(k: int) -> List[ExactRational]:
    """
    B_0..B_k from the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0,
    with B_1 = -1/2. The table is memoized and extended on demand.
    """
    if k < 0:
        raise DomainError(f"bernoulli index must be nonnegative, got {k}")
    with _bernoulli_lock:
        while len(_bernoulli_table) <= k:
            m = len(_bernoulli_table)
            if m > 1 and m % 2 == 1:
                _bernoulli_table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j, b in enumerate(_bernoulli_table):
                if b:
                    acc += math.comb(m + 1, j) * b
            _bernoulli_table.append(-acc / (m + 1))
        return list(_bernoulli_table[: k + 1])


def bernoulli(k: int) -> ExactRational:
    if k < 0 or k % 2 == 1:
        raise DomainError(f"bernoulli needs an even index >= 0, got {k}")
    with _bernoulli_lock:
        if k < len(_bernoulli_table):
            return _bernoulli_table[k]
    return bernoulli_sequence(k)[k]


def divisors(k: int) -> List[int]:
    if k < 1:
        raise DomainError(f"divisors needs k >= 1, got {k}")
    return [d for d in range(1, k + 1) if k % d == 0]


def mobius(k: int) -> int:
    if k < 1:
        raise DomainError(f"mobius needs k >= 1, got {k}")
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


def format_rational(value: RationalLike) -> str:
    """Rationals are always serialized as "p/q" strings ("p" when q = 1)."""
    return str(Fraction(value))
