from fractions import Fraction

import pytest

from zetaforms.errors import DomainError, InternalConsistencyError, PrecisionError
from zetaforms.forms.linear_forms import build_forms
from zetaforms.forms.rational_function import Params
from zetaforms.numerics.precision import RootOfUnity, working_context
from zetaforms.numerics.series import (
    beta_factor,
    converge_power_law,
    eval_form_numeric,
    eval_r_direct,
    eval_r_star,
    star_series,
)
from zetaforms.options.numerics import NumericsOptions


@pytest.fixture
def term_budget():
    original = NumericsOptions.term_budget()
    yield NumericsOptions.term_budget
    NumericsOptions.term_budget(original)


class HarmonicSquares:
    """sum 1/(k+1)^2 with the interface converge_power_law drives."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.k = 0
        self.total = ctx.mpf(0)
        self.last = ctx.mpf(0)
        self.previous = ctx.mpf(0)

    def advance(self, terms):
        while self.k < terms:
            term = self.ctx.mpf(1) / (self.k + 1) ** 2
            self.total += term
            self.previous, self.last = self.last, term
            self.k += 1


@pytest.mark.parametrize(
    "params, k, expected",
    [
        (Params(D=1, s=2, n=2), 0, Fraction(1, 30)),
        (Params(D=2, s=5, n=0), 0, Fraction(1)),
        (Params(D=2, s=5, n=2), 1, Fraction(1, 60)),
    ],
)
def test_beta_factor(params, k, expected):
    assert beta_factor(params, k) == expected


def test_beta_factor_negative_index():
    with pytest.raises(DomainError):
        beta_factor(Params(D=1, s=2, n=2), -1)


def test_star_series_partial_sums():
    ctx = working_context(30)
    partial = star_series(Params(D=1, s=2, n=0), 3, ctx)
    # t_k = 1/(k+1)^2
    assert partial.terms == 3
    assert abs(partial.total - ctx.mpf(49) / 36) < ctx.mpf(10) ** -30
    assert abs(partial.last_term - ctx.mpf(1) / 9) < ctx.mpf(10) ** -30


def test_star_series_residue_split():
    ctx = working_context(30)
    partial = star_series(Params(D=2, s=5, n=0), 4, ctx)
    assert len(partial.sums) == 2
    assert partial.sums[0] > 0 and partial.sums[1] > 0


def test_eval_r_direct_degenerate():
    value = eval_r_direct(Params(D=1, s=2, n=0), 1, 30)
    ctx = value.ctx
    assert abs(value.value - (ctx.pi**2 / 6 - 1)) < ctx.mpf(10) ** -30
    assert value.within(30)


def test_eval_r_direct_rejects_shift():
    with pytest.raises(DomainError):
        eval_r_direct(Params(D=2, s=5, n=2), 3, 20)


@pytest.mark.parametrize("params", [Params(D=1, s=2, n=2), Params(D=2, s=5, n=2)])
def test_direct_series_matches_form(params):
    for form in build_forms(params).forms:
        direct = eval_r_direct(params, form.j, 40)
        via_form = eval_form_numeric(form, 40)
        assert direct.agrees_with(via_form, direct.ctx.mpf(10) ** -35)
        assert direct.certainly_positive()


def test_converge_power_law():
    ctx = working_context(12)
    series = HarmonicSquares(ctx)
    bound = converge_power_law(series, 2, ctx.mpf(10) ** -3, "squares")
    assert bound <= ctx.mpf(10) ** -3
    assert abs(series.total - ctx.pi**2 / 6) <= bound


def test_converge_power_law_budget(term_budget):
    term_budget(256)
    ctx = working_context(12)
    with pytest.raises(PrecisionError):
        converge_power_law(HarmonicSquares(ctx), 2, ctx.mpf(10) ** -12, "squares")


def test_converge_power_law_needs_decay():
    ctx = working_context(12)
    with pytest.raises(InternalConsistencyError):
        converge_power_law(HarmonicSquares(ctx), 1, ctx.mpf(10) ** -3, "squares")


# n = 0, D = 1: the terms are (k+1)^-s, so r* = zeta(s)
@pytest.mark.parametrize("s, digits", [(2, 3), (3, 6)])
def test_eval_r_star_degenerate(s, digits):
    star = eval_r_star(Params(D=1, s=s, n=0), 1, digits)
    ctx = star.value.ctx
    assert abs(star.value.value - ctx.zeta(s)) <= star.value.abs_error
    assert star.tail_bound <= ctx.mpf(10) ** -digits
    assert star.to_json()["heuristic_tail"] is True


def test_eval_r_star_rejects_index():
    with pytest.raises(DomainError):
        eval_r_star(Params(D=2, s=5, n=2), 3, 10)


def _recombine(partial, D, m, ctx):
    total = ctx.mpf(0)
    for c, residue_sum in enumerate(partial.sums):
        total += RootOfUnity(ctx, D, m * c).value.value * residue_sum
    return total


@pytest.mark.parametrize(
    "params, m",
    [(Params(D=1, s=3, n=2), 1), (Params(D=2, s=5, n=2), 1), (Params(D=3, s=8, n=2), 2)],
)
def test_doubling_the_cutoff_stays_within_tail_bound(params, m):
    star = eval_r_star(params, m, 10)
    ctx = star.value.ctx
    assert star.tail_bound < ctx.mpf(10) ** -10
    assert star.terms_used <= 10**5

    doubled = star_series(params, 2 * star.terms_used, ctx)
    assert doubled.terms == 2 * star.terms_used
    moved = abs(_recombine(doubled, params.D, m, ctx) - star.value.value)
    assert moved <= star.value.abs_error


def test_star_sums_follow_term_budget(term_budget):
    params = Params(D=1, s=3, n=0)
    assert eval_r_star(params, 1, 6).terms_used >= 512
    # a budget no larger than the first cutoff cannot settle
    term_budget(256)
    with pytest.raises(PrecisionError):
        eval_r_star(params, 1, 6)
