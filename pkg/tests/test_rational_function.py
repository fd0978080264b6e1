import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from zetaforms.errors import ConditioningError, ParameterError, PoleError
from zetaforms.forms.rational_function import (
    Params,
    build_R,
    check_symmetry,
    eval_R_exact,
    eval_R_float,
    zero_points,
)
from zetaforms.numerics.precision import PrecisionValue, to_mp, working_context
from zetaforms.reports.report import resolve_params


@pytest.fixture
def small():
    return build_R(Params(D=1, s=2, n=2))


@pytest.fixture
def d2():
    return build_R(Params(D=2, s=5, n=2))


def test_params_defaults():
    params = Params(D=2, s=5, n=2)
    assert params.precision_digits == 40
    assert params.kappa == 3 * 6 - 13
    assert not params.degenerate
    assert params.label() == "D=2,s=5,n=2"


@pytest.mark.parametrize(
    "kwargs, constraint",
    [
        ({"D": 2, "s": 3, "n": 2}, "s >= 3D-1"),
        ({"D": 1, "s": 2, "n": 3}, "n even"),
        ({"D": 1, "s": 3, "n": 1, "allow_odd_n": True}, "odd n only for D=2"),
        ({"D": 0, "s": 2, "n": 2}, "D >= 1"),
        ({"D": 1, "s": 2, "n": -2}, "n >= 0"),
    ],
)
def test_params_name_the_violated_constraint(kwargs, constraint):
    with pytest.raises(ValidationError):
        Params(**kwargs)
    with pytest.raises(ParameterError) as e:
        resolve_params(
            kwargs["D"], kwargs["s"], kwargs["n"], allow_odd_n=kwargs.get("allow_odd_n", False)
        )
    assert constraint in str(e.value)


def test_params_odd_n_for_d2():
    params = Params(D=2, s=5, n=1, allow_odd_n=True)
    assert params.reflection_sign == -1


def test_params_are_frozen():
    params = Params(D=1, s=2, n=2)
    with pytest.raises(ValidationError):
        params.n = 4


def test_build_R_small(small):
    assert small.prefactor == 1
    assert small.numerator_roots == tuple(Fraction(k) for k in range(-4, 3))
    assert small.poles == (0, 1, 2)
    assert small.pole_order == 3


def test_build_R_d2(d2):
    assert d2.prefactor == 4096
    assert d2.numerator_degree == 13
    assert d2.pole_order == 6
    assert d2.denominator_degree == 18
    assert d2.numerator_roots[0] == -4
    assert d2.numerator_roots[-1] == 2


def test_eval_R_exact(small):
    assert eval_R_exact(small, 3) == Fraction(7, 300)
    assert eval_R_exact(small, -5) == Fraction(7, 300)
    assert eval_R_exact(small, 1) == 0


def test_eval_R_exact_at_pole(small):
    with pytest.raises(PoleError):
        eval_R_exact(small, -1)


def test_zero_points_are_zeros(d2):
    points = zero_points(d2.params)
    assert points == [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    for t in points:
        assert eval_R_exact(d2, t) == 0


@pytest.mark.parametrize(
    "params, samples",
    [
        (Params(D=1, s=2, n=2), [3, Fraction(7, 2), Fraction(22, 7)]),
        (Params(D=1, s=3, n=2), [3]),
        (Params(D=2, s=5, n=2), [4, Fraction(-1, 3)]),
    ],
)
def test_check_symmetry(params, samples):
    assert check_symmetry(build_R(params), samples)


def test_check_symmetry_rejects_poles(small):
    with pytest.raises(PoleError):
        check_symmetry(small, [0])


def test_eval_R_float_matches_exact(small):
    ctx = working_context(40)
    t = PrecisionValue.exact(ctx, 3)
    value = eval_R_float(small, t)
    exact = ctx.mpf(7) / 300
    assert abs(value.value - exact) < ctx.mpf(10) ** -35
    assert value.abs_error < ctx.mpf(10) ** -35


def test_eval_R_float_near_pole(small):
    ctx = working_context(40)
    t = PrecisionValue(ctx, ctx.mpf(-1) + ctx.mpf(10) ** -30)
    with pytest.raises(ConditioningError):
        eval_R_float(small, t)


def test_expansion_at_infinity_leading_term(small):
    # R(T) ~ prefactor * T^{-kappa}
    coefficients = small.expansion_at_infinity(3)
    assert coefficients[0] == 1


def _random_non_integers(rng, count):
    points = []
    while len(points) < count:
        t = Fraction(rng.randint(-60, 60), rng.randint(2, 13))
        if t.denominator != 1:
            points.append(t)
    return points


@pytest.mark.parametrize(
    "params",
    [
        Params(D=1, s=2, n=2),
        Params(D=1, s=3, n=2),
        Params(D=2, s=5, n=2),
        Params(D=2, s=5, n=4),
        Params(D=3, s=8, n=2),
    ],
)
def test_check_symmetry_random_points(params):
    rng = random.Random(params.D * 100 + params.s * 10 + params.n)
    assert check_symmetry(build_R(params), _random_non_integers(rng, 20))


def test_eval_R_float_far_out(small):
    # kappa = 2 and the prefactor is 1, so R(t) ~ t^-2
    ctx = working_context(30)
    t = 10**4
    value = eval_R_float(small, PrecisionValue.exact(ctx, t))
    leading = to_mp(ctx, small.prefactor) * ctx.mpf(t) ** (-small.params.kappa)
    assert leading / 2 < value.value < 2 * leading
    assert abs(value.value - to_mp(ctx, eval_R_exact(small, t))) <= value.abs_error


@pytest.mark.parametrize("params", [Params(D=1, s=2, n=2), Params(D=3, s=8, n=2)])
def test_eval_R_float_at_numerator_root(params):
    R = build_R(params)
    ctx = working_context(30)
    for root in zero_points(params)[:3]:
        value = eval_R_float(R, PrecisionValue.exact(ctx, root))
        assert abs(value.value) <= value.abs_error


def test_eval_R_float_threshold_follows_working_precision(small):
    # 40 target digits work at 55 dps: the threshold is 10^-27
    fine = working_context(40)
    near = PrecisionValue(fine, fine.mpf(-1) + fine.mpf(10) ** -24)
    assert eval_R_float(small, near).value > 0

    # 10 target digits work at 25 dps: the threshold is 10^-12
    coarse = working_context(10)
    near = PrecisionValue(coarse, coarse.mpf(-1) + coarse.mpf(10) ** -15)
    with pytest.raises(ConditioningError):
        eval_R_float(small, near)
