from fractions import Fraction
from typing import List

import pytest

from zetaforms.checks.argument import Argument, InvalidArgumentException
from zetaforms.checks.check import Check, Context
from zetaforms.checks.events import CheckVerdict, Event
from zetaforms.checks.example import Example


@pytest.fixture
def argument():
    return Argument(
        name="D",
        description="Denominator of the shifts",
        type="int",
        required=True,
    )


@pytest.fixture
def example():
    return Example(
        name="basic",
        args={"D": 2, "s": 5, "json": True},
        output="two forms",
        description="Forms for D=2",
    )


@pytest.fixture
def check(argument, example):
    def double(D: int, scale: int = 2):
        return D * scale

    return Check(
        name="double",
        description="Doubles D",
        args=[argument, Argument("scale", "Multiplier", "int", default=2)],
        func=double,
        examples=[example],
    )


@pytest.fixture
def context(check):
    return Context(check=check)


def test_argument_initialization(argument):
    assert argument.name == "D"
    assert argument.type == "int"
    assert argument.required is True
    assert argument.default is None
    assert str(argument) == "D - int - Required: True - Denominator of the shifts"


@pytest.mark.parametrize(
    "type, raw, expected",
    [
        ("int", "7", 7),
        ("bool", "true", True),
        ("bool", "no", False),
        ("rational", "-1/3", Fraction(-1, 3)),
        ("list[int]", "-1,7", [-1, 7]),
        ("list[int]", "[2, 4, 6]", [2, 4, 6]),
        ("int", 5, 5),
    ],
)
def test_argument_convert(type, raw, expected):
    assert Argument("x", "", type).convert(raw) == expected


def test_argument_default_is_converted():
    assert Argument("x", "", "rational", default="1/2").default == Fraction(1, 2)
    assert Argument("x", "", "rational", default="1/2").to_json()["default"] == "1/2"


def test_example_command_line(example):
    assert example.command_line("form") == "zetaforms form --D 2 --s 5 --json"
    block = Example.ExampleBlock("form", example)
    assert block.startswith("Forms for D=2\n$ zetaforms form")
    assert block.endswith("Expect: two forms")


def test_check_initialization(check):
    assert check.name == "double"
    assert len(check.args) == 2
    assert check.id
    assert "double(D: int, scale: int)" in str(check)


def test_check_call(check):
    assert check(D=3) == 6
    assert check(D="4", scale="3") == 12
    assert check({"D": 5}) == 10


def test_check_positional_arguments(check):
    assert check(3, 5) == 15
    with pytest.raises(TypeError):
        check(3, D=4)


def test_check_missing_argument(check):
    with pytest.raises(InvalidArgumentException) as e:
        check(scale=2)
    assert "Missing required arguments: D" in str(e.value)


def test_check_extraneous_argument(check):
    with pytest.raises(InvalidArgumentException) as e:
        check(D=1, s=5)
    assert "Extraneous arguments: s" in str(e.value)


def test_check_records_output(check, context):
    assert check(context, D=2) == 4
    assert context.status == "complete"
    assert context.output == 4
    assert context.args == {"D": 2, "scale": 2}
    assert [event.event_type for event in context.events] == [
        "check_called",
        "check_return",
    ]


def test_check_records_exception():
    def broken(D: int):
        raise ValueError("no")

    failing = Check("broken", "Always fails", [Argument("D", "", "int")], broken)
    ctx = Context(failing)
    with pytest.raises(ValueError):
        failing(ctx, D=1)
    assert ctx.status == "error"
    assert ctx.events[-1].event_type == "check_exception"
    assert "ValueError: no" in ctx.to_json()["history"][-1]["data"]


def test_check_receives_context():
    seen = []

    def record(context: Context, D: int):
        context["D"] = D
        seen.append(context)
        return D

    recorder = Check("record", "", [Argument("D", "", "int")], record)
    ctx = Context(recorder)
    recorder(ctx, D=3)
    assert seen == [ctx]
    assert ctx["D"] == 3
    assert "D" in ctx


def test_nested_call_uses_child_context(check):
    def outer(context: Context):
        return check(context, D=1)

    wrapper = Check("outer", "", [], outer)
    ctx = Context(wrapper)
    assert wrapper(ctx) == 2
    assert len(ctx.children) == 1
    child = ctx.children[0]
    assert child.check is check
    assert child.parent is ctx
    assert child.root is ctx
    assert ctx.is_root and not child.is_root
    assert child.output == 2


def test_child_events_reach_parent(context, check):
    received: List[Event] = []
    context.add_event_listener(lambda ctx, event: received.append(event))
    child = context.child_context(check)
    child.verdict("identity", True)

    types = [event.event_type for event in received]
    assert types == ["child_context_created", "check_verdict"]
    # the verdict belongs to the child's history only
    assert all(event.event_type != "check_verdict" for event in context.events)
    assert child.events[0].event_type == "check_verdict"


def test_own_listener_ignores_children(context, check):
    received: List[Event] = []
    context.add_event_listener(
        lambda ctx, event: received.append(event), ignore_children_events=True
    )
    context.child_context(check).verdict("identity", False)
    context.verdict("own", True)
    assert [event.data["name"] for event in received if isinstance(event, CheckVerdict)] == [
        "own"
    ]


def test_context_output_set_once(context):
    context.output = 1
    with pytest.raises(ValueError):
        context.output = 2


def test_context_to_json(check, context):
    check(context, D=2)
    data = context.to_json()
    assert data["check_name"] == "double"
    assert data["status"] == "complete"
    assert data["args"] == {"D": "2", "scale": "2"}
    assert data["output"] == 4
    assert data["error"] is None


def test_check_to_json(check):
    data = check.to_json()
    assert data["name"] == "double"
    assert [arg["name"] for arg in data["args"]] == ["D", "scale"]
    assert data["examples"][0]["name"] == "basic"
