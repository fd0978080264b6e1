import json

import pytest
from pydantic import ValidationError

from zetaforms.errors import ParameterError
from zetaforms.reports.report import (
    SCHEMA,
    CheckOutcome,
    Report,
    RunConfig,
    Section,
    resolve_params,
    unwrap_validation_error,
)


@pytest.fixture
def sections():
    return [
        Section(
            name="form D=1,s=2,n=2",
            data={"R": {"prefactor": "1"}},
            checks=[
                CheckOutcome.exact("simple poles cancel", True),
                CheckOutcome(
                    name="eq1 j=1", passed=True, residual="1.0e-45", bound="2.0e-44"
                ),
            ],
            elapsed=1.23456,
        ),
        Section(
            name="verify-pfq D=1,s=2,n=2",
            checks=[CheckOutcome.exact("pfq j=1", False, "tail bound too large")],
        ),
    ]


def constraint_of(**kwargs) -> str:
    with pytest.raises(ValidationError) as e:
        RunConfig(**kwargs)
    error = unwrap_validation_error(e.value)
    assert isinstance(error, ParameterError)
    return error.constraint


def test_run_config_defaults():
    config = RunConfig(command="form", D=2, s=5, n=2)
    assert config.digits == 40
    assert config.format == "json"
    assert config.params().label() == "D=2,s=5,n=2"
    assert "timings" not in config.to_json()
    assert "format" not in config.to_json()


def test_run_config_parses_lists():
    assert RunConfig(command="combine", D=2, s=5, n=2, weights="-1,7").weights == [-1, 7]
    assert RunConfig(command="growth", D=1, s=2, n_values="[2, 4]").n_values == [2, 4]


@pytest.mark.parametrize(
    "kwargs, constraint",
    [
        ({"command": "form", "D": 2, "s": 3, "n": 2}, "s >= 3D-1"),
        ({"command": "form", "D": 1, "s": 2, "n": 3}, "n even"),
        ({"command": "form", "D": 1, "s": 2, "n": 0}, "n >= 1 (pass --allow-degenerate-n for n = 0)"),
        ({"command": "form", "s": 2, "n": 2}, "D is required"),
        ({"command": "form", "D": 1, "s": 2}, "n is required"),
        ({"command": "form", "D": 1, "s": 2, "n": 2, "digits": 5}, "digits >= 10"),
        ({"command": "verify-eq1", "D": 2, "s": 5, "n": 2, "j": 3}, "1 <= j <= D"),
        ({"command": "combine", "D": 2, "s": 5, "n": 2, "weights": "1,2,3"}, "one weight per j"),
        ({"command": "verify-filter", "D": 2, "s": 5, "n": 2, "x": "3/2"}, "|x| < 1"),
        ({"command": "verify-filter", "D": 2, "s": 5, "n": 2, "x": "half"}, "x is a rational p/q"),
        ({"command": "growth", "D": 1, "s": 2}, "n_values is required"),
        ({"command": "growth", "D": 1, "s": 2, "n_values": "4,2"}, "n_values increasing"),
    ],
)
def test_run_config_constraints(kwargs, constraint):
    assert constraint_of(**kwargs) == constraint


def test_suite_needs_no_parameters():
    assert RunConfig(command="suite").D is None


def test_degenerate_n_with_flag():
    params = resolve_params(1, 2, 0, allow_degenerate_n=True)
    assert params.degenerate


def test_run_config_is_frozen():
    config = RunConfig(command="suite")
    with pytest.raises(ValidationError):
        config.digits = 50


def test_check_outcome_json():
    outcome = CheckOutcome(name="eq1", passed=True, residual="1e-45", bound="2e-44")
    assert outcome.to_json() == {
        "name": "eq1",
        "pass": True,
        "residual": "1e-45",
        "bound": "2e-44",
    }


def test_section_timings(sections):
    assert "elapsed_seconds" not in sections[0].to_json()
    assert sections[0].to_json(timings=True)["elapsed_seconds"] == 1.235
    assert sections[0].passed
    assert not sections[1].passed


def test_report_summary(sections):
    report = Report(config=RunConfig(command="suite"), sections=sections)
    assert not report.passed
    assert report.exit_code == 1
    assert report.summary() == {
        "checks": 3,
        "passed": 2,
        "failed": ["pfq j=1"],
        "pass": False,
    }


def test_report_json_is_deterministic(sections):
    config = RunConfig(command="suite")
    first = Report(config=config, sections=sections).render()
    second = Report(config=config, sections=sections).render()
    assert first == second
    data = json.loads(first)
    assert data["schema"] == SCHEMA
    assert list(data) == sorted(data)
    assert "elapsed_seconds" not in first


def test_report_csv(sections):
    report = Report(config=RunConfig(command="suite", format="csv"), sections=sections)
    lines = report.render().split("\n")
    assert lines[0] == "section,check,pass,residual,bound,detail"
    assert len(lines) == 4
    assert lines[3] == '"verify-pfq D=1,s=2,n=2",pfq j=1,false,,,tail bound too large'


def test_report_text(sections):
    report = Report(
        config=RunConfig(command="suite", format="text", timings=True),
        sections=sections,
    )
    text = report.render()
    assert text.startswith(f"{SCHEMA} suite")
    assert "[pass] form D=1,s=2,n=2 (1.23s)" in text
    assert "[FAIL] verify-pfq D=1,s=2,n=2" in text
    assert text.endswith("2/3 checks passed")


def test_empty_report_passes():
    report = Report(config=RunConfig(command="suite"))
    assert report.passed
    assert report.exit_code == 0
