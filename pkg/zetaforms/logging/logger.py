"""Logger module for following check execution as it happens."""

import json
import sys
from threading import Lock
from typing import Any, Dict, Optional, TextIO

from zetaforms.checks.check import Check, Context
from zetaforms.checks.events import Event
from zetaforms.registrar.registrar import Registrar


class Colors:
    """ANSI color codes for terminal output formatting."""

    RESET = "\033[0m"
    BOLD = "\033[1m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    MAGENTA = "\033[35m"
    CYAN = "\033[36m"
    GRAY = "\033[90m"


class Logger:
    """Thread-safe logger writing one colored block per check event.

    The CLI points it at stderr so stdout carries only the report.
    """

    def __init__(
        self,
        output_stream: Optional[TextIO] = None,
        use_colors: bool = True,
        indent_size: int = 2,
        event_colors: Optional[Dict[str, str]] = None,
    ):
        """
        Args:
            output_stream: Where to write log output. Defaults to stderr.
            use_colors: Whether to use ANSI colors in output.
            indent_size: Number of spaces for JSON indentation.
            event_colors: Custom color mapping for event types.
        """
        self.output_stream = output_stream if output_stream else sys.stderr
        self.use_colors = use_colors
        self.indent_size = indent_size
        self._lock = Lock()
        self._event_colors = (
            event_colors
            if event_colors
            else {
                "child_context_created": Colors.GRAY,
                "check_called": Colors.YELLOW,
                "check_return": Colors.GREEN,
                "check_exception": Colors.RED,
                "check_verdict": Colors.CYAN,
            }
        )

    def attach_check(self, check: Check):
        """Log every future call of this check and all of its events."""
        check.add_on_call_listener(self.on_check_call)

    def on_check_call(self, check: Check, context: Context):
        context.add_event_listener(self.log_event, ignore_children_events=True)

    def _colorize(self, text: str, color: str) -> str:
        if self.use_colors:
            return f"{color}{text}{Colors.RESET}"
        return text

    def _format_data(self, data: Any) -> str:
        if data is None:
            return ""

        if isinstance(data, (dict, list)):
            try:
                return json.dumps(data, indent=self.indent_size, sort_keys=True)
            except (TypeError, ValueError):
                return str(data)
        return str(data)

    def _format_event(self, event: Event, context: Context) -> str:
        color = self._event_colors.get(event.event_type, Colors.GRAY)
        if event.event_type == "check_verdict" and not event.data["pass"]:
            color = Colors.RED

        timestamp = event._get_readable_timestamp()
        event_type = event.event_type.replace("_", " ").title()
        name = context.check.name if context.check else "?"
        header = f"{timestamp} - {event_type} [{name}]"

        if event.data is None:
            return self._colorize(header, color)

        if event.event_type == "check_return":
            # reports are large; the verdicts already say what matters
            return self._colorize(header, color)

        if event.event_type == "check_exception":
            formatted = f"{type(event.data).__name__}: {event.data}"
        elif hasattr(event.data, "to_json"):
            formatted = self._format_data(event.data.to_json())
        else:
            formatted = self._format_data(event.data)

        if not formatted:
            return self._colorize(header, color)
        indented = "\n".join(f"    {line}" for line in formatted.split("\n"))
        return self._colorize(f"{header}:\n{indented}", color)

    def _write(self, text: str):
        if self.output_stream:
            with self._lock:
                self.output_stream.write(f"{text}\n")
                self.output_stream.flush()

    def log_event(self, context: Context, event: Event):
        self._write(self._format_event(event, context))

    def cleanup(self):
        self.output_stream = None


class GlobalLogger:
    """
    Singleton Logger attached, through the Registrar, to every check.
    """

    _instance: Optional[Logger] = None

    def __init__(self):
        raise ValueError("GlobalLogger is a singleton")

    @classmethod
    def get_instance(cls, **kwargs) -> Logger:
        if not cls._instance:
            cls._instance = Logger(**kwargs)
        return cls._instance

    @classmethod
    def enable(cls, **kwargs):
        Registrar.enable()
        instance = cls.get_instance(**kwargs)
        Registrar.add_check_call_listener(instance.on_check_call)

    @classmethod
    def disable(cls):
        if cls._instance:
            Registrar.remove_check_call_listener(cls._instance.on_check_call)
            cls._instance = None
        Registrar.disable()
