from fractions import Fraction

import pytest

from zetaforms.checks.check import Context
from zetaforms.errors import (
    DomainError,
    IrreducibleCombinationError,
    ParameterError,
    PrecisionError,
)
from zetaforms.toolbox import build_checks
from zetaforms.toolbox.suite import SuiteCase, acceptance_grid


@pytest.fixture(scope="module")
def checks():
    return build_checks()


def test_build_checks(checks):
    assert sorted(checks) == sorted(
        [
            "form",
            "verify-eq1",
            "verify-theorem1",
            "verify-filter",
            "verify-pfq",
            "combine",
            "growth",
            "verify-d2",
            "all",
            "suite",
        ]
    )


def test_form_section(checks):
    section = checks["form"](D=2, s=5, n=2)
    assert section.passed
    assert section.name == "form D=2,s=5,n=2"
    names = [check.name for check in section.checks]
    assert "simple poles cancel D=2,s=5,n=2" in names
    assert "integrality D=2,s=5,n=2 j=2" in names
    assert set(section.data["forms"][0]["a"]) == {"3", "5"}
    assert section.data["column_sums"]["1"] == "0"


def test_form_records_verdicts(checks):
    verdicts = []
    ctx = Context(checks["form"])
    ctx.add_event_listener(
        lambda _, event: verdicts.append(event)
        if event.event_type == "check_verdict"
        else None
    )
    section = checks["form"](ctx, D=1, s=2, n=2)
    assert len(verdicts) == len(section.checks)
    assert ctx["poles"] == 3


def test_form_rejects_parameters(checks):
    with pytest.raises(ParameterError):
        checks["form"](D=2, s=3, n=2)
    with pytest.raises(ParameterError):
        checks["form"](D=1, s=2, n=0)


def test_form_degenerate_with_flag(checks):
    section = checks["form"](D=1, s=2, n=0, allow_degenerate_n=True)
    assert section.passed
    assert section.data["forms"][0]["a0"] == "-1"


def test_combine_default_for_d2(checks):
    section = checks["combine"](D=2, s=5, n=2)
    assert section.passed
    assert section.data["combination"]["c"]["3"] == "0"
    assert [check.name for check in section.checks] == [
        "c_3 = 0 D=2,s=5,n=2",
        "c_5 = (8 - 2^5) a_5 D=2,s=5,n=2",
    ]


def test_combine_with_weights(checks):
    section = checks["combine"](D=2, s=5, n=2, weights="1,1")
    a5 = Fraction(section.data["a"]["5"])
    assert Fraction(section.data["combination"]["c"]["5"]) == 32 * a5
    assert section.checks == []


def test_combine_errors(checks):
    with pytest.raises(DomainError):
        checks["combine"](D=1, s=3, n=2)
    with pytest.raises(IrreducibleCombinationError):
        checks["combine"](D=3, s=8, n=2, weights=[1, 2, 1])


def test_verify_eq1(checks):
    section = checks["verify-eq1"](D=1, s=2, n=2)
    assert section.passed
    assert [check.name for check in section.checks] == [
        "eq1 D=1,s=2,n=2 j=1",
        "positive D=1,s=2,n=2 j=1",
    ]
    assert "1" in section.data["values"]


def test_verify_eq1_single_shift(checks):
    section = checks["verify-eq1"](D=2, s=5, n=2, j=2)
    assert section.passed
    assert all(check.name.endswith("j=2") for check in section.checks)


def test_verify_theorem1(checks):
    section = checks["verify-theorem1"](D=1, s=3, n=2)
    assert section.passed
    assert section.data["residuals"][0]["details"]["heuristic_tail"] is True


def test_verify_filter_closed_form(checks):
    section = checks["verify-filter"](
        D=2, s=5, n=0, j=1, x="1/2", allow_degenerate_n=True
    )
    assert section.passed
    assert section.data["residuals"][0]["details"]["lhs"].startswith("2.2222")
    assert len(section.checks) == 2


def test_verify_filter_default_points(checks):
    section = checks["verify-filter"](D=2, s=5, n=2, digits=25)
    assert section.passed
    # three points and one generating check per shift
    assert len(section.checks) == 2 * 4


def test_verify_pfq(checks):
    section = checks["verify-pfq"](D=1, s=3, n=2)
    assert section.passed
    assert section.data["hypergeometric"]["1"]["prefactor"] == "7/9000"


def test_verify_d2(checks):
    section = checks["verify-d2"](D=2, s=5, n=2, digits=10)
    assert section.passed


def test_verify_d2_domain(checks):
    with pytest.raises(DomainError):
        checks["verify-d2"](D=1, s=3, n=2)


def test_growth(checks):
    sections = checks["growth"](D=1, s=2, n_values="2,4,6", digits=30)
    assert len(sections) == 1
    assert sections[0].passed
    assert sections[0].data["all_positive"]
    assert len(sections[0].data["rows"]) == 3


def test_growth_reports_unreachable_precision(checks, monkeypatch):
    def unreachable(params_list, j, digits):
        raise PrecisionError("direct series needs a larger cutoff")

    monkeypatch.setattr("zetaforms.toolbox.verify.growth_report", unreachable)
    sections = checks["growth"](D=2, s=5, n_values="2,4", digits=30)
    assert [section.name for section in sections] == [
        "growth D=2,s=5 j=1",
        "growth D=2,s=5 j=2",
    ]
    assert not any(section.passed for section in sections)
    assert sections[0].checks[0].detail == "direct series needs a larger cutoff"


def test_all_skips_inapplicable_steps(checks):
    ctx = Context(checks["all"])
    sections = checks["all"](ctx, D=1, s=3, n=2)
    assert [section.name.split(" ")[0] for section in sections] == [
        "form",
        "verify-eq1",
        "verify-theorem1",
        "verify-filter",
        "verify-pfq",
    ]
    assert all(section.passed for section in sections)
    theorem1 = ctx.children[2]
    assert theorem1.args["digits"] == 12


def test_acceptance_grid():
    grid = acceptance_grid()
    kinds = [case["kind"] for case in grid]
    assert kinds.count("form") == 6
    assert kinds.count("verify-eq1") == 6
    assert kinds.count("verify-theorem1") == 3
    assert kinds.count("verify-filter") == 4
    assert kinds.count("verify-pfq") == 2
    assert kinds.count("combine") == 3
    assert kinds.count("divisor") == 5
    assert all(
        case["allow_degenerate_n"] == (case["n"] == 0)
        for case in grid
        if case["kind"] == "verify-filter"
    )


def test_suite_case_divisor(checks):
    section = SuiteCase(checks)(case={"kind": "divisor", "d": 3})
    assert section.name == "divisor formula d=3"
    assert section.passed
    assert len(section.checks) == 3


def test_suite_case_dispatch(checks):
    section = SuiteCase(checks)(case={"kind": "form", "D": 1, "s": 3, "n": 2})
    assert section.name == "form D=1,s=3,n=2"
    assert section.passed
