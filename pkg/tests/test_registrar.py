import gc
import weakref
from unittest.mock import Mock

import pytest

from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.registrar.registrar import Registrar


@pytest.fixture
def mock_check():
    return Check(
        name="registered_check",
        description="A check for the registrar",
        args=[Argument("D", "Denominator", "int", required=True)],
        func=lambda D: D,
    )


@pytest.fixture(autouse=True)
def disabled_registrar():
    yield
    Registrar.disable()


def test_registrar_cannot_be_instantiated():
    with pytest.raises(ValueError, match="Registrar cannot be instantiated"):
        Registrar()


def test_check_registration(mock_check):
    assert Registrar._on_check_call in mock_check._on_call_listeners


def test_duplicate_registration(mock_check):
    Registrar.register(mock_check)
    assert mock_check._on_call_listeners.count(Registrar._on_check_call) == 1


def test_checks_are_not_retained():
    check = Check("short_lived_check", "", [], lambda: None)
    ref = weakref.ref(check)
    del check
    gc.collect()
    assert ref() is None


def test_call_listeners_only_when_enabled(mock_check):
    listener = Mock()
    Registrar.add_check_call_listener(listener)
    try:
        mock_check(D=1)
        listener.assert_not_called()

        Registrar.enable()
        assert Registrar.is_enabled()
        ctx = Context(mock_check)
        mock_check(ctx, D=2)
        listener.assert_called_once_with(mock_check, ctx)
    finally:
        Registrar.remove_check_call_listener(listener)


def test_listener_added_once():
    listener = Mock()
    Registrar.add_check_call_listener(listener)
    Registrar.add_check_call_listener(listener)
    try:
        Registrar.enable()
        check = Check("listened_check", "", [], lambda: None)
        check()
        assert listener.call_count == 1
    finally:
        Registrar.remove_check_call_listener(listener)
