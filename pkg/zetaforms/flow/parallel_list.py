from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Iterable, List, Optional

from zetaforms.checks.argument import Argument
from zetaforms.checks.check import Check, Context
from zetaforms.options.numerics import NumericsOptions


class ParallelList(Check):
    """Runs a check concurrently across a list of argument sets.

    Args:
        check (Check): The check to run for each input
        item_formatter (Optional[Callable[[Any], dict]]): Turns each input
            item into the kwargs of the wrapped check. Without it, each item
            must already be such a dict.
        result_formatter (Optional[Callable[[List[Any]], Any]]): Combines
            the results, which are always passed in input order.
        max_workers (Optional[int]): Thread fan-out. Defaults to
            NumericsOptions.max_workers().
        error_strategy (str): "fail" re-raises the first error (default);
            "ignore" puts the exception in place of that item's result.
        name (Optional[str]): Defaults to "{check.name}::parallel_list"
        description (Optional[str]): Defaults to one built from the check's
    """

    def __init__(
        self,
        check: Check,
        item_formatter: Optional[Callable[[Any], dict]] = None,
        result_formatter: Optional[Callable[[List[Any]], Any]] = None,
        max_workers: Optional[int] = None,
        error_strategy: str = "fail",
        name: Optional[str] = None,
        description: Optional[str] = None,
    ):
        if error_strategy not in ["ignore", "fail"]:
            raise ValueError("error_strategy must be one of: ignore, fail")

        self.check = check
        self._item_formatter = item_formatter
        self._result_formatter = result_formatter
        self._error_strategy = error_strategy
        self._max_workers = max_workers

        if not name:
            name = f"{check.name}::parallel_list"

        if not description:
            description = (
                f"Runs {check.name} in parallel across a list of inputs. "
                f"{check.name} is:\n{check.description}"
            )

        list_arg_description = "A list wherein each item consists of:"
        for arg in check.args:
            list_arg_description += f"\n- {arg.name} ({arg.type})"
            if arg.required:
                list_arg_description += " [required]"
            list_arg_description += f": {arg.description}"

        super().__init__(
            name=name,
            description=description,
            args=[
                Argument(
                    name="input",
                    description=list_arg_description,
                    type="list",
                    required=True,
                )
            ],
            func=self.parallelize,
            examples=check.examples,
        )

    def parallelize(self, context: Context, **kwargs) -> Any:
        input = kwargs[self.args[0].name]

        if not isinstance(input, Iterable):
            raise ValueError(
                f"The input argument must be an iterable, got {type(input)}"
            )
        input = list(input)
        if self._item_formatter:
            input = [self._item_formatter(item) for item in input]

        # child contexts are created here, in input order, so the run
        # history does not depend on thread scheduling
        children = [context.child_context(self.check) for _ in input]

        results: List[Any] = [None] * len(input)
        workers = self._max_workers or NumericsOptions.max_workers()
        with ThreadPoolExecutor(
            max_workers=workers, thread_name_prefix=f"{self.name}::parallel"
        ) as pool:
            futures = {
                pool.submit(self.check, child, **item): idx
                for idx, (child, item) in enumerate(zip(children, input))
            }
            for future in as_completed(futures):
                idx = futures[future]
                try:
                    results[idx] = future.result()
                except Exception as e:
                    if self._error_strategy == "fail":
                        for pending in futures:
                            pending.cancel()
                        raise e
                    results[idx] = e

        context["results"] = results
        if self._result_formatter:
            return self._result_formatter(results)
        return list(results)
