import json
import traceback
from datetime import datetime, timezone
from time import time
from typing import Any, Dict


class Event:
    """
    Events are emitted while a check runs and bubble up through the chain
    of contexts to the root.
    """

    def __init__(self, event_type: str, data: Any = None):
        self._event_type = event_type
        self.data = data
        self._timestamp = time()

    @property
    def event_type(self) -> str:
        return self._event_type

    @property
    def timestamp(self) -> float:
        return self._timestamp

    def _get_readable_timestamp(self) -> str:
        return datetime.fromtimestamp(
            self._timestamp, tz=timezone.utc
        ).strftime("%Y-%m-%d %H:%M:%S UTC")

    def __str__(self) -> str:
        out = f"{self._get_readable_timestamp()}: {self._event_type}"
        if self.data:
            out += f":\n{self.data}"
        return out

    def to_json(self) -> dict:
        if hasattr(self.data, "to_json"):
            data = self.data.to_json()
        elif isinstance(self.data, (dict, list)):
            data = self.data
        else:
            try:
                json.dumps(self.data)
                data = self.data
            except (TypeError, ValueError):
                data = str(self.data)

        return {
            "type": self._event_type,
            "timestamp": self._timestamp,
            "data": data,
        }


class CheckCalled(Event):
    def __init__(self, args: Dict[str, Any]):
        super().__init__("check_called", args)

    def __str__(self) -> str:
        args_str = ", ".join(
            f"{arg}={value}" for arg, value in self.data.items()
        )
        return f"{self._get_readable_timestamp()} ({args_str!s})"


class CheckReturn(Event):
    def __init__(self, result: Any):
        super().__init__("check_return", result)

    def __str__(self) -> str:
        return f"{self._get_readable_timestamp()} returned:\n{self.data}"


class CheckException(Event):
    def __init__(self, exception: Exception):
        super().__init__("check_exception", exception)

    def __str__(self) -> str:
        out = f"{self._get_readable_timestamp()}: check_exception -"
        if self.data:
            e: Exception = self.data
            out += f"\n{e}\n\n"
            out += "".join(
                traceback.format_exception(type(e), e, e.__traceback__)
            )

        return out

    def to_json(self) -> dict:
        return {
            "type": self._event_type,
            "timestamp": self._timestamp,
            "data": f"{type(self.data).__name__}: {self.data}",
        }


class CheckVerdict(Event):
    """One gated outcome (a residual, a certificate, an exact identity)."""

    def __init__(self, name: str, passed: bool, detail: str = ""):
        super().__init__(
            "check_verdict", {"name": name, "pass": passed, "detail": detail}
        )

    @property
    def passed(self) -> bool:
        return self.data["pass"]

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{self._get_readable_timestamp()} {self.data['name']}: {status}"
        )


class ChildContextCreated(Event):
    def __init__(self, parent: str, child: str):
        super().__init__(
            "child_context_created",
            {"parent": parent, "child": child},
        )
