from fractions import Fraction

import pytest

from zetaforms.errors import DomainError, IrreducibleCombinationError
from zetaforms.forms.linear_forms import (
    build_forms,
    certify_integrality,
    d2_special_form,
    extract_form,
    reduce_to_zeta,
)
from zetaforms.forms.rational_function import Params


def test_degenerate_forms():
    form = build_forms(Params(D=1, s=2, n=0)).forms[0]
    assert form.j == 1
    assert form.a0 == -1
    assert form.a == {2: 1}

    form = build_forms(Params(D=1, s=3, n=0)).forms[0]
    assert form.a0 == -1
    assert form.a == {3: 1}


def test_forms_share_a_i_and_keep_parity():
    forms = build_forms(Params(D=2, s=5, n=2)).forms
    assert [form.j for form in forms] == [1, 2]
    assert forms[0].a == forms[1].a
    assert set(forms[0].a) == {3, 5}
    assert forms[1].alpha == 1


def test_extract_form_rejects_bad_shift():
    table = build_forms(Params(D=2, s=5, n=2)).table
    with pytest.raises(DomainError):
        extract_form(table, 3)


@pytest.mark.parametrize(
    "D, s, n", [(1, 2, 2), (1, 3, 2), (1, 4, 4), (2, 5, 2), (2, 5, 4), (3, 8, 2)]
)
def test_certificates_pass(D, s, n):
    for form in build_forms(Params(D=D, s=s, n=n)).forms:
        certificate = certify_integrality(form)
        assert certificate.passed
        assert certificate.failures() == []


def test_certificate_multipliers():
    form = build_forms(Params(D=1, s=2, n=2)).forms[0]
    certificate = certify_integrality(form)
    assert certificate.d_n.value == 2
    assert certificate.d_n1.value == 6
    data = certificate.to_json()
    assert data["pass"] is True
    assert [w["gate"] for w in data["witnesses"]][-1] is False


def test_reduce_single_shift():
    forms = build_forms(Params(D=1, s=3, n=2)).forms
    combination = reduce_to_zeta(forms, [1])
    assert combination.c == forms[0].a
    assert combination.c0 == forms[0].a0


def test_reduce_uniform_weights():
    forms = build_forms(Params(D=2, s=5, n=2)).forms
    combination = reduce_to_zeta(forms, [1, 1])
    a = forms[0].a
    assert combination.c == {i: 2**i * value for i, value in a.items()}
    assert combination.c0 == forms[0].a0 + forms[1].a0


def test_reduce_eliminates_zeta3():
    forms = build_forms(Params(D=2, s=5, n=2)).forms
    combination = reduce_to_zeta(forms, [-1, 7])
    assert combination.c[3] == 0
    assert combination.c[5] == -24 * forms[0].a[5]
    assert combination.divisor_coefficients == {1: -1, 2: 8}


def test_reduce_irreducible_weights():
    forms = build_forms(Params(D=3, s=8, n=2)).forms
    with pytest.raises(IrreducibleCombinationError) as e:
        reduce_to_zeta(forms, [1, 2, 1])
    assert e.value.residual_terms


def test_reduce_wrong_weight_count():
    forms = build_forms(Params(D=2, s=5, n=2)).forms
    with pytest.raises(DomainError):
        reduce_to_zeta(forms, [1])


@pytest.mark.parametrize(
    "params",
    [
        Params(D=2, s=5, n=2),
        Params(D=2, s=7, n=2),
        Params(D=2, s=5, n=4),
        Params(D=2, s=5, n=1, allow_odd_n=True),
    ],
)
def test_d2_special_form(params):
    combination = d2_special_form(params)
    assert combination.c.get(3, Fraction(0)) == 0
    assert combination.weights == {1: -1, 2: 7}


@pytest.mark.parametrize("params", [Params(D=1, s=3, n=2), Params(D=2, s=6, n=2)])
def test_d2_special_form_domain(params):
    with pytest.raises(DomainError):
        d2_special_form(params)


def test_form_json():
    form = build_forms(Params(D=1, s=2, n=0)).forms[0]
    assert form.to_json() == {"j": 1, "alpha": "1", "a0": "-1", "a": {"2": "1"}}
