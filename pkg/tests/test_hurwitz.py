from fractions import Fraction

import mpmath
import pytest

from zetaforms.errors import DomainError
from zetaforms.numerics.hurwitz import divisor_formula_check, hurwitz_zeta

ZETA3 = "1.2020569031595942853997381615114499907649862923405"


def test_zeta_two():
    value = hurwitz_zeta(2, 1, 40)
    ctx = value.ctx
    assert abs(value.value - ctx.pi**2 / 6) < ctx.mpf(10) ** -40
    assert value.within(40)


def test_zeta_two_at_half():
    value = hurwitz_zeta(2, Fraction(1, 2), 40)
    ctx = value.ctx
    assert abs(value.value - ctx.pi**2 / 2) < ctx.mpf(10) ** -40


def test_zeta_three():
    value = hurwitz_zeta(3, 1, 40)
    assert abs(value.value - value.ctx.mpf(ZETA3)) < value.ctx.mpf(10) ** -40


@pytest.mark.parametrize("i, alpha", [(4, Fraction(1, 3)), (5, Fraction(2, 3)), (7, Fraction(3, 4))])
def test_matches_mpmath(i, alpha):
    value = hurwitz_zeta(i, alpha, 30)
    with mpmath.workdps(50):
        reference = mpmath.zeta(i, mpmath.mpf(alpha.numerator) / alpha.denominator)
        assert abs(value.value - reference) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("i, alpha", [(1, 1), (0, 1), (2, 0), (2, Fraction(3, 2)), (2, -1)])
def test_domain(i, alpha):
    with pytest.raises(DomainError):
        hurwitz_zeta(i, alpha, 20)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
def test_divisor_formula(d):
    for i in (2, 3, 5):
        residual = divisor_formula_check(d, i, 30)
        assert residual.passed, str(residual)
