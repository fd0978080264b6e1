from __future__ import annotations

import inspect
import threading
import traceback
from time import time
from types import TracebackType
from typing import Any, Callable, Dict, List, Optional
from uuid import uuid4

from zetaforms.checks.argument import Argument, InvalidArgumentException
from zetaforms.checks.events import (
    CheckCalled,
    CheckException,
    CheckReturn,
    CheckVerdict,
    ChildContextCreated,
    Event,
)
from zetaforms.checks.example import Example
from zetaforms.registrar.registrar import Registrar


class Context:
    """
    Context tracks one execution of a check. A context may own child
    contexts (a Sequence or a ParallelList runs each step in one), so the
    root context holds the history of an entire run. Always present:

    1. id - unique identifier of this execution
    2. children - child contexts, in creation order
    3. status - "running", "complete" or "error"
    4. output - what the check returned, if anything yet
    5. history - the events emitted by this check, in order
    6. args - the arguments this execution was called with

    Listeners registered with add_event_listener() are called synchronously,
    in broadcast order, so log lines follow the computation they describe.
    Events from children are re-broadcast to their parent.

    ctx["key"] = value stores per-execution data (timings, intermediate
    counts) under a lock.
    """

    def __init__(
        self, check: Optional[Check] = None, parent: Optional[Context] = None
    ):
        self.__id = str(uuid4())
        self.__executing = False
        self.__check = check
        self.__parent = parent

        self.__exception: Optional[Exception] = None
        self.__args: Dict[str, Any] = {}
        self.__output: Any = None
        self.__created_at = time()

        self.__children: List[Context] = []
        self.__event_listeners_all: List[Callable[[Context, Event], None]] = []
        self.__event_listeners_own: List[Callable[[Context, Event], None]] = []
        self.__history: List[Event] = []
        self.__data: Dict[str, Any] = {}

        self.__lock = threading.RLock()

    def __enter__(self):
        return self

    def __exit__(
        self,
        exc_type: Optional[type],
        exc_value: Optional[Exception],
        traceback: Optional[TracebackType],
    ) -> bool:
        if exc_type is not None:
            self.exception = exc_value
        return False

    def __getitem__(self, name: str) -> Any:
        with self.__lock:
            return self.__data[name]

    def __setitem__(self, name: str, value: Any):
        with self.__lock:
            self.__data[name] = value

    def __contains__(self, name: str) -> bool:
        with self.__lock:
            return name in self.__data

    @property
    def root(self) -> Context:
        if self.__parent is None:
            return self
        return self.__parent.root

    @property
    def is_root(self) -> bool:
        return self.__parent is None

    @property
    def check(self) -> Optional[Check]:
        return self.__check

    @check.setter
    def check(self, check: Check):
        with self.__lock:
            if self.__check:
                raise ValueError("check already set")
            self.__check = check

    @property
    def parent(self) -> Optional[Context]:
        return self.__parent

    @property
    def children(self) -> List[Context]:
        with self.__lock:
            return list(self.__children)

    @property
    def events(self) -> List[Event]:
        with self.__lock:
            return list(self.__history)

    @property
    def id(self) -> str:
        return self.__id

    def child_context(self, check: Check) -> Context:
        """Create a new child context for the given check."""
        ctx = Context(check=check, parent=self)

        with self.__lock:
            self.__children.append(ctx)

        ctx.add_event_listener(
            lambda event_context, event: self.broadcast(
                event, source_context=event_context
            )
        )

        self.broadcast(ChildContextCreated(self.id, ctx.id))
        return ctx

    @property
    def status(self) -> str:
        with self.__lock:
            if self.__exception:
                return "error"
            elif self.__output is not None:
                return "complete"
            else:
                return "running"

    @property
    def executing(self) -> bool:
        with self.__lock:
            return self.__executing

    @executing.setter
    def executing(self, executing: bool):
        with self.__lock:
            if self.__executing:
                raise ValueError("already executing")
            self.__executing = executing

    def add_event_listener(
        self,
        listener: Callable[[Context, Event], None],
        ignore_children_events: bool = False,
    ):
        with self.__lock:
            if ignore_children_events:
                self.__event_listeners_own.append(listener)
            else:
                self.__event_listeners_all.append(listener)

    def broadcast(self, event: Event, source_context: Optional[Context] = None):
        if source_context is None:
            source_context = self

        with self.__lock:
            own = source_context.id == self.id
            if own:
                self.__history.append(event)
            listeners = list(self.__event_listeners_all)
            if own:
                listeners += self.__event_listeners_own

        for listener in listeners:
            listener(source_context, event)

    def verdict(self, name: str, passed: bool, detail: str = ""):
        self.broadcast(CheckVerdict(name, passed, detail))

    @property
    def exception(self) -> Optional[Exception]:
        with self.__lock:
            return self.__exception

    @exception.setter
    def exception(self, e: Optional[Exception]):
        if e is not None:
            self.broadcast(CheckException(e))
        with self.__lock:
            self.__exception = e

    @property
    def args(self) -> Dict[str, Any]:
        with self.__lock:
            return self.__args

    @args.setter
    def args(self, args: Optional[Dict[str, Any]]):
        with self.__lock:
            if self.__args and args:
                raise ValueError("args already set")
            self.__args = args or {}

    @property
    def output(self) -> Any:
        with self.__lock:
            return self.__output

    @output.setter
    def output(self, value: Any):
        with self.__lock:
            if self.__output is not None and value is not None:
                raise ValueError("output already set")
            self.__output = value

    def to_json(self, children: bool = True) -> dict:
        output = self.output
        if hasattr(output, "to_json"):
            output = output.to_json()
        elif isinstance(output, list):
            output = [
                item.to_json() if hasattr(item, "to_json") else str(item)
                for item in output
            ]

        exception = None
        if self.exception:
            exception = "".join(
                traceback.format_exception(
                    type(self.exception),
                    self.exception,
                    self.exception.__traceback__,
                )
            )

        return {
            "id": self.__id,
            "parent_id": self.__parent.id if self.__parent else None,
            "check_name": self.__check.name if self.__check else None,
            "status": self.status,
            "args": {k: str(v) for k, v in self.args.items()},
            "output": output,
            "history": [event.to_json() for event in self.events],
            "created_at": self.__created_at,
            "children": (
                [child.to_json() for child in self.children] if children else []
            ),
            "error": exception,
        }


class Check:
    """
    A named, documented, callable unit of verification. Calling a check
    validates its arguments against the declared Argument list, runs func
    inside a Context, and records the call, the return value and any
    exception as events on that context.
    """

    def __init__(
        self,
        name: str,
        description: str,
        args: List[Argument],
        func: Callable,
        examples: Optional[List[Example]] = None,
        id: Optional[str] = None,
    ):
        self.__id = id or str(uuid4())
        self.name = name
        self.description = description
        self.args = args
        self.func = func
        self.examples = examples or []
        self._on_call_listeners: List[Callable[[Check, Context], None]] = []

        Registrar.register(self)

    @property
    def id(self) -> str:
        return self.__id

    def _init_context_(self, context: Optional[Context], kwargs) -> Context:
        if context is None:
            ctx = Context(self)
        else:
            ctx = context

        if ctx.executing:
            ctx = context.child_context(self)
            ctx.executing = True
        else:
            if not ctx.check:
                ctx.check = self
            ctx.executing = True

        ctx.args = kwargs
        for listener in self._on_call_listeners:
            listener(self, ctx)
        ctx.broadcast(CheckCalled(kwargs))

        return ctx

    def invoke(self, context: Context, **kwargs) -> Any:
        params = inspect.signature(self.func).parameters
        if "context" in params:
            return self.func(context=context, **kwargs)
        return self.func(**kwargs)

    def extract_arguments(self, args, kwargs):
        context = None
        if args and isinstance(args[0], Context):
            context = args[0]
            args = args[1:]

        if len(args) == 1 and not kwargs and isinstance(args[0], dict):
            kwargs = dict(args[0])
            args = ()

        check_args = [arg.name for arg in self.args]
        for i, value in enumerate(args):
            if i < len(check_args):
                if check_args[i] in kwargs:
                    raise TypeError(
                        f"Got multiple values for argument '{check_args[i]}'"
                    )
                kwargs[check_args[i]] = value

        if "context" in kwargs:
            if context is not None:
                raise ValueError("context passed twice")
            context = kwargs.pop("context")

        return context, kwargs

    def __call__(self, *args, **kwargs) -> Any:
        context, kwargs = self.extract_arguments(args, kwargs)

        with self._init_context_(context, kwargs) as ctx:
            kwargs = self.convert_arguments(self.fulfill_defaults(kwargs))
            self.check_arguments(kwargs)

            results = self.invoke(ctx, **kwargs)
            ctx.output = results
            ctx.broadcast(CheckReturn(results))
            return results

    def fulfill_defaults(self, args: Dict[str, Any]) -> Dict[str, Any]:
        """Fill in any missing argument that declares a default."""
        for arg in self.args:
            if arg.name not in args and arg.default is not None:
                args[arg.name] = arg.default

        return args

    def convert_arguments(self, args: Dict[str, Any]) -> Dict[str, Any]:
        by_name = {arg.name: arg for arg in self.args}
        return {
            name: by_name[name].convert(value) if name in by_name else value
            for name, value in args.items()
        }

    def check_arguments(self, args: Dict[str, Any]):
        missing_args = []
        extraneous_args = []

        arg_names = [arg.name for arg in self.args]
        for arg in args.keys():
            if arg not in arg_names:
                extraneous_args.append(arg)

        for arg in self.args:
            if arg.required and arg.name not in args:
                missing_args.append(arg.name)

        if missing_args or extraneous_args:
            raise InvalidArgumentException(
                self.name, missing_args, extraneous_args
            )

    def examples_text(
        self, example_format: Optional[Callable[[str, Example], str]] = None
    ) -> List[str]:
        if not example_format:
            example_format = Example.ExampleBlock

        return [example_format(self.name, example) for example in self.examples]

    def add_on_call_listener(self, listener: Callable[[Check, Context], None]):
        self._on_call_listeners.append(listener)

    def __str__(self) -> str:
        args_str = ", ".join(f"{arg.name}: {arg.type}" for arg in self.args)
        return f"{self.name}({args_str}): {self.description}"

    def __repr__(self) -> str:
        return self.__str__()

    def to_json(self) -> dict:
        return {
            "id": self.__id,
            "name": self.name,
            "description": self.description,
            "args": [arg.to_json() for arg in self.args],
            "examples": [example.to_json() for example in self.examples],
        }
