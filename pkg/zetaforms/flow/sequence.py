from typing import Any, Callable, Dict, List, Optional

from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.checks.example import Example

Formatter = Callable[[Dict[str, Any]], Dict[str, Any]]
Condition = Callable[[Dict[str, Any]], bool]


class Sequence(Check):
    """
    A check that runs several checks one after another on the same
    arguments.

    Unlike a pipeline, the output of a step is not fed to the next one;
    every step receives the caller's arguments, narrowed to the ones it
    declares. The outputs are collected in step order, and a step that
    returns a list contributes each of its items.

    Args:
        name (str): The name of the sequence

        description (str): What running the whole sequence verifies

        arguments (Optional[List[Argument]]): Arguments of the sequence. If
            not specified, the union of the steps' arguments is used, first
            declaration winning.

        steps (List[Check]): Checks to run, in order

        formatters (Optional[List[Optional[Formatter]]]): One optional
            function per step, called on that step's arguments before the
            step runs. Use it to adjust an argument for a single step, for
            instance to cap the number of digits of an expensive check.

        conditions (Optional[List[Optional[Condition]]]): One optional
            predicate per step, called on the caller's arguments. A step
            whose predicate is false is skipped.

        examples (Optional[List[Example]]): Example invocations
    """

    def __init__(
        self,
        name: str,
        description: str,
        arguments: Optional[List[Argument]],
        steps: List[Check],
        formatters: Optional[List[Optional[Formatter]]] = None,
        conditions: Optional[List[Optional[Condition]]] = None,
        examples: Optional[List[Example]] = None,
    ):
        if not steps:
            raise ValueError("a sequence needs at least one step")

        formatters = list(formatters or [])
        if len(formatters) > len(steps):
            raise ValueError(
                f"got {len(formatters)} formatters for {len(steps)} steps"
            )
        self.steps = steps
        self.formatters = formatters + [None] * (len(steps) - len(formatters))

        conditions = list(conditions or [])
        if len(conditions) > len(steps):
            raise ValueError(
                f"got {len(conditions)} conditions for {len(steps)} steps"
            )
        self.conditions = conditions + [None] * (len(steps) - len(conditions))

        if arguments is None:
            arguments = []
            seen = set()
            for step in steps:
                for arg in step.args:
                    if arg.name not in seen:
                        seen.add(arg.name)
                        arguments.append(arg)

        super().__init__(
            name=name,
            description=description,
            args=arguments,
            func=self.invoke_steps,
            examples=examples,
        )

    def invoke_steps(self, context: Context, **kwargs) -> List[Any]:
        outputs: List[Any] = []
        context["step"] = 0
        for index, step in enumerate(self.steps):
            context["step"] = index
            condition, formatter = self.conditions[index], self.formatters[index]
            if condition and not condition(kwargs):
                continue
            names = {arg.name for arg in step.args}
            step_args = {k: v for k, v in kwargs.items() if k in names}
            if formatter:
                step_args = formatter(step_args)

            output = step(context, **step_args)
            if isinstance(output, list):
                outputs.extend(output)
            else:
                outputs.append(output)
        return outputs
