from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, Sequence, Union

from zetaforms.arith.core import format_rational
from zetaforms.errors import PoleError
from zetaforms.forms.rational_function import Params, RationalFunctionRep
from zetaforms.options.numerics import NumericsOptions


class PartialFractionTable:
    """
    Exact coefficients A[l][i] of (t+l)^{-i} in the decomposition
    R(t) = sum_{l=0}^{n} sum_{i=1}^{s+1} A[l][i] / (t+l)^i.
    """

    def __init__(self, params: Params, rows: Sequence[Sequence[Fraction]]):
        self.params = params
        self.__rows: List[List[Fraction]] = [
            [Fraction(value) for value in row] for row in rows
        ]
        if len(self.__rows) != params.n + 1:
            raise ValueError("one row per pole is required")
        for row in self.__rows:
            if len(row) != params.s + 1:
                raise ValueError("each row needs s+1 coefficients")

    @property
    def poles(self) -> range:
        return range(self.params.n + 1)

    @property
    def orders(self) -> range:
        return range(1, self.params.s + 2)

    def coefficient(self, l: int, i: int) -> Fraction:
        return self.__rows[l][i - 1]

    def __getitem__(self, key) -> Fraction:
        l, i = key
        return self.coefficient(l, i)

    def to_json(self) -> List[Dict[str, Union[int, str]]]:
        return [
            {"l": l, "i": i, "A": format_rational(self.coefficient(l, i))}
            for l in self.poles
            for i in self.orders
        ]


def decompose(R: RationalFunctionRep) -> PartialFractionTable:
    """
    The coefficient of (t+l)^{-i} is the u^{s+1-i} coefficient of the local
    series of R(t)(t+l)^{s+1} at u = t+l = 0. Poles are expanded
    independently across a thread pool; the table does not depend on the
    schedule.
    """
    order = R.pole_order

    def expand(l: int) -> List[Fraction]:
        local = R.local_series(l, order)
        return [local[order - i] for i in range(1, order + 1)]

    with ThreadPoolExecutor(max_workers=NumericsOptions.max_workers()) as executor:
        rows = list(executor.map(expand, R.poles))

    return PartialFractionTable(R.params, rows)


def reconstruct_eval(table: PartialFractionTable, t: Union[int, Fraction]) -> Fraction:
    t = Fraction(t)
    if t.denominator == 1 and -table.params.n <= t <= 0:
        raise PoleError(f"t={t} is a pole of the decomposition")
    total = Fraction(0)
    for l in table.poles:
        base = 1 / (t + l)
        power = Fraction(1)
        for i in table.orders:
            power *= base
            coefficient = table.coefficient(l, i)
            if coefficient:
                total += coefficient * power
    return total


def column_sums(table: PartialFractionTable) -> Dict[int, Fraction]:
    return {
        i: sum((table.coefficient(l, i) for l in table.poles), Fraction(0))
        for i in table.orders
    }


def parity_profile(table: PartialFractionTable) -> Dict[int, bool]:
    """Maps each order i to whether sum_l A[l][i] vanishes exactly."""
    return {i: total == 0 for i, total in column_sums(table).items()}


def reflection_holds(table: PartialFractionTable) -> bool:
    """
    R(-n-t) = sign * R(t) sends the pole at -l to the pole at -(n-l), which
    forces A[n-l][i] = sign * (-1)^i * A[l][i]. Checked on the computed
    table, never assumed.
    """
    n = table.params.n
    sign = table.params.reflection_sign
    for l in table.poles:
        for i in table.orders:
            expected = sign * (-1) ** i * table.coefficient(l, i)
            if table.coefficient(n - l, i) != expected:
                return False
    return True
