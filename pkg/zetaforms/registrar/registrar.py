from threading import Lock
from typing import TYPE_CHECKING, Callable, List

if TYPE_CHECKING:
    from zetaforms.checks.check import Check, Context


class Registrar:
    """
    Process-wide hook on every Check constructed. When enabled, it forwards
    each check call to its listeners (GlobalLogger uses this to log every
    check without attaching to them one by one). Checks themselves are not
    retained.
    """

    _lock = Lock()
    _enabled = False

    __on_check_call_listeners: List[Callable[["Check", "Context"], None]] = []

    def __new__(cls):
        raise ValueError("Registrar cannot be instantiated")

    @classmethod
    def register(cls, check: "Check"):
        if cls._on_check_call not in check._on_call_listeners:
            check.add_on_call_listener(cls._on_check_call)

    @classmethod
    def _on_check_call(cls, check: "Check", ctx: "Context"):
        with cls._lock:
            if not cls._enabled:
                return
            listeners = list(cls.__on_check_call_listeners)

        for listener in listeners:
            listener(check, ctx)

    @classmethod
    def add_check_call_listener(
        cls, listener: Callable[["Check", "Context"], None]
    ):
        with cls._lock:
            if listener not in cls.__on_check_call_listeners:
                cls.__on_check_call_listeners.append(listener)

    @classmethod
    def remove_check_call_listener(
        cls, listener: Callable[["Check", "Context"], None]
    ):
        with cls._lock:
            if listener in cls.__on_check_call_listeners:
                cls.__on_check_call_listeners.remove(listener)

    @classmethod
    def enable(cls):
        with cls._lock:
            cls._enabled = True

    @classmethod
    def disable(cls):
        with cls._lock:
            cls._enabled = False

    @classmethod
    def is_enabled(cls) -> bool:
        with cls._lock:
            return cls._enabled
