from zetaforms.checks.argument import Argument, InvalidArgumentException
from zetaforms.checks.check import Check, Context
from zetaforms.checks.events import (
    CheckCalled,
    CheckException,
    CheckReturn,
    CheckVerdict,
    ChildContextCreated,
    Event,
)
from zetaforms.checks.example import Example

__all__ = [
    "Argument",
    "Check",
    "CheckCalled",
    "CheckException",
    "CheckReturn",
    "CheckVerdict",
    "ChildContextCreated",
    "Context",
    "Event",
    "Example",
    "InvalidArgumentException",
]
