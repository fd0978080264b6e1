"""
Run configuration and the report every command emits. Exact rationals are
"p/q" strings, numerical values are decimal strings with an "err" bound, and
JSON is written with sorted keys so identical configurations give
byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    ValidationError,
    field_validator,
    model_validator,
)

from zetaforms.checks.check import Check
from zetaforms.errors import ParameterError
from zetaforms.forms.linear_forms import IntegralityCertificate
from zetaforms.forms.rational_function import Params
from zetaforms.numerics.precision import Residual

SCHEMA = "zetaforms/1"

# commands that take a single (D, s, n)
PARAMETRIZED = {
    "form",
    "verify-eq1",
    "verify-theorem1",
    "verify-filter",
    "verify-pfq",
    "verify-d2",
    "combine",
    "all",
}


def _int_list(value: Any) -> Any:
    if isinstance(value, str):
        value = value.strip().strip("[]")
        return [int(item) for item in value.split(",") if item.strip()]
    return value


def unwrap_validation_error(error: ValidationError) -> Exception:
    """The ParameterError a validator raised, if there is one."""
    for detail in error.errors():
        cause = (detail.get("ctx") or {}).get("error")
        if isinstance(cause, ParameterError):
            return cause
        if isinstance(cause, ValidationError):
            return unwrap_validation_error(cause)
    return error


def resolve_params(
    D: int,
    s: int,
    n: int,
    digits: int = 40,
    allow_odd_n: bool = False,
    allow_degenerate_n: bool = False,
) -> Params:
    if n == 0 and not allow_degenerate_n:
        raise ParameterError(
            "n >= 1 (pass --allow-degenerate-n for n = 0)", f"got n={n}"
        )
    try:
        return Params(
            D=D, s=s, n=n, precision_digits=digits, allow_odd_n=allow_odd_n
        )
    except ValidationError as e:
        raise unwrap_validation_error(e) from None


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    D: Optional[int] = None
    s: Optional[int] = None
    n: Optional[int] = None
    j: Optional[int] = None
    weights: Optional[List[int]] = None
    digits: int = 40
    format: Literal["json", "csv", "text"] = "json"
    allow_odd_n: bool = False
    allow_degenerate_n: bool = False
    x: Optional[str] = None
    n_values: Optional[List[int]] = None
    timings: bool = False

    @field_validator("weights", "n_values", mode="before")
    @classmethod
    def _split_lists(cls, value: Any) -> Any:
        return _int_list(value)

    @model_validator(mode="after")
    def _check_constraints(self) -> RunConfig:
        if self.digits < 10:
            raise ParameterError("digits >= 10", f"got {self.digits}")
        if self.command in PARAMETRIZED or self.command == "growth":
            for name in ("D", "s"):
                if getattr(self, name) is None:
                    raise ParameterError(f"{name} is required")
        if self.command in PARAMETRIZED:
            if self.n is None:
                raise ParameterError("n is required")
            self.params()
        if self.command == "growth":
            if not self.n_values:
                raise ParameterError("n_values is required")
            if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
                raise ParameterError("n_values increasing", f"got {self.n_values}")
            for n in self.n_values:
                self.params(n)
        if self.j is not None and self.D is not None and not 1 <= self.j <= self.D:
            raise ParameterError("1 <= j <= D", f"got j={self.j}, D={self.D}")
        if self.weights is not None and self.D is not None and len(self.weights) != self.D:
            raise ParameterError(
                "one weight per j", f"got {len(self.weights)} for D={self.D}"
            )
        if self.x is not None:
            try:
                x = Fraction(self.x)
            except (ValueError, ZeroDivisionError):
                raise ParameterError("x is a rational p/q", f"got {self.x!r}")
            if abs(x) >= 1:
                raise ParameterError("|x| < 1", f"got {self.x}")
        return self

    def params(self, n: Optional[int] = None) -> Params:
        return resolve_params(
            self.D,
            self.s,
            self.n if n is None else n,
            self.digits,
            self.allow_odd_n,
            self.allow_degenerate_n,
        )

    def arguments_for(self, check: Check) -> Dict[str, Any]:
        """The configured values of the arguments a check declares."""
        out = {}
        for arg in check.args:
            value = getattr(self, arg.name, None)
            if value is not None:
                out[arg.name] = value
        return out

    def to_json(self) -> dict:
        return self.model_dump(exclude={"timings", "format"})


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    residual: Optional[str] = None
    bound: Optional[str] = None
    detail: Optional[str] = None

    @classmethod
    def from_residual(cls, residual: Residual) -> CheckOutcome:
        data = residual.to_json()
        detail = None
        if "imaginary" in data:
            detail = f"imaginary part {data['imaginary']}"
        return cls(
            name=residual.name,
            passed=residual.passed,
            residual=data["residual"],
            bound=data["bound"],
            detail=detail,
        )

    @classmethod
    def from_certificate(cls, certificate: IntegralityCertificate) -> CheckOutcome:
        failures = certificate.failures()
        return cls(
            name=f"integrality {certificate.form.params.label()} j={certificate.form.j}",
            passed=certificate.passed,
            detail="not integral: " + ", ".join(failures) if failures else None,
        )

    @classmethod
    def exact(cls, name: str, passed: bool, detail: Optional[str] = None) -> CheckOutcome:
        return cls(name=name, passed=passed, detail=detail)

    def to_json(self) -> dict:
        out = self.model_dump(exclude_none=True, exclude={"passed"})
        out["pass"] = self.passed
        return out


class Section(BaseModel):
    """What one check contributes to a report."""

    name: str
    data: Dict[str, Any] = {}
    checks: List[CheckOutcome] = []
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "data": self.data,
            "checks": [check.to_json() for check in self.checks],
            "pass": self.passed,
        }
        if timings and self.elapsed is not None:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


class Report(BaseModel):
    config: RunConfig
    sections: List[Section] = []

    @property
    def checks(self) -> List[CheckOutcome]:
        return [check for section in self.sections for check in section.checks]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> dict:
        checks = self.checks
        failed = [check.name for check in checks if not check.passed]
        return {
            "checks": len(checks),
            "passed": len(checks) - len(failed),
            "failed": failed,
            "pass": not failed,
        }

    def to_json(self) -> dict:
        timings = self.config.timings
        return {
            "schema": SCHEMA,
            "config": self.config.to_json(),
            "sections": [section.to_json(timings) for section in self.sections],
            "summary": self.summary(),
        }

    def render(self) -> str:
        if self.config.format == "csv":
            return self.to_csv()
        if self.config.format == "text":
            return self.to_text()
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["section", "check", "pass", "residual", "bound", "detail"])
        for section in self.sections:
            for check in section.checks:
                writer.writerow(
                    [
                        section.name,
                        check.name,
                        "true" if check.passed else "false",
                        check.residual or "",
                        check.bound or "",
                        check.detail or "",
                    ]
                )
        return buffer.getvalue().rstrip("\n")

    def to_text(self) -> str:
        lines = [f"{SCHEMA} {self.config.command}"]
        for section in self.sections:
            status = "pass" if section.passed else "FAIL"
            header = f"[{status}] {section.name}"
            if self.config.timings and section.elapsed is not None:
                header += f" ({section.elapsed:.2f}s)"
            lines.append(header)
            for check in section.checks:
                mark = "ok  " if check.passed else "FAIL"
                line = f"  {mark} {check.name}"
                if check.residual is not None:
                    line += f"  residual={check.residual} bound={check.bound}"
                if check.detail:
                    line += f"  {check.detail}"
                lines.append(line)
        summary = self.summary()
        lines.append(f"{summary['passed']}/{summary['checks']} checks passed")
        return "\n".join(lines)
