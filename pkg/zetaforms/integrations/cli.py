import sys
from typing import Dict, List, Optional

import click
from pydantic import ValidationError

from zetaforms.checks.argument import Argument, InvalidArgumentException
from zetaforms.checks.check import Check, Context
from zetaforms.errors import DomainError, IrreducibleCombinationError, ParameterError
from zetaforms.logging.logger import GlobalLogger
from zetaforms.reports.report import Report, RunConfig, unwrap_validation_error
from zetaforms.toolbox import build_checks

# exit status for invalid parameters; failed checks exit with 1
USAGE_ERROR = 2


class CLI(click.Group):
    """
    A click group exposing every check as a command. Each command validates
    its options into a RunConfig, runs the check and prints the Report on
    stdout. Logging, when enabled, goes to stderr.
    """

    def __init__(
        self,
        checks: Optional[Dict[str, Check]] = None,
        name: str = "zetaforms",
        help_text: Optional[str] = None,
    ):
        self.checks = checks if checks is not None else build_checks()
        help_text = help_text or (
            "Construct, certify and numerically verify the linear forms "
            "r_{n,j} in Hurwitz zeta values."
        )

        super().__init__(name=name, help=help_text)

        self._type_map = {
            "int": click.INT,
            "bool": click.BOOL,
        }

        for check in self.checks.values():
            self.add_command(self._create_command(check))
        self.no_args_is_help = True

    def _create_option(self, arg: Argument) -> click.Option:
        """Convert a check Argument to a click Option, keeping its case."""
        flag = f"--{arg.name.replace('_', '-')}"
        if arg.type == "bool":
            return click.Option(
                [flag, arg.name], is_flag=True, default=False, help=arg.description
            )

        kwargs = {
            "help": arg.description,
            # RunConfig reports missing values with the constraint named
            "required": False,
            "type": self._type_map.get(arg.type.lower(), click.STRING),
        }
        if arg.default is not None:
            kwargs["default"] = arg.default
            kwargs["show_default"] = True
        return click.Option([flag, arg.name], **kwargs)

    def _create_command(self, check: Check) -> click.Command:
        params: List[click.Parameter] = [
            click.Option(
                ["--format", "format"],
                type=click.Choice(["json", "csv", "text"]),
                default="json",
                show_default=True,
                help="Report format",
            ),
            click.Option(
                ["--json", "as_json"],
                is_flag=True,
                default=False,
                help="Shorthand for --format json",
            ),
            click.Option(
                ["--timings"],
                is_flag=True,
                default=False,
                help="Include wall-clock timings (reports are then not reproducible)",
            ),
            click.Option(
                ["--verbose", "-v"],
                is_flag=True,
                default=False,
                help="Log every check call and verdict to stderr",
            ),
            click.Option(
                ["--output-file"],
                type=click.Path(dir_okay=False, writable=True),
                required=False,
                help="Write the report to a file instead of stdout",
            ),
        ]
        params.extend(self._create_option(arg) for arg in check.args)

        @click.pass_context
        def command_func(ctx: click.Context, **kwargs):
            if kwargs.pop("as_json"):
                kwargs["format"] = "json"
            verbose = kwargs.pop("verbose")
            output_file = kwargs.pop("output_file", None)

            values = {
                key: value
                for key, value in kwargs.items()
                if value is not None and key in RunConfig.model_fields
            }
            try:
                config = RunConfig(command=check.name, **values)
            except ValidationError as e:
                self._fail(ctx, unwrap_validation_error(e))

            if verbose:
                GlobalLogger.enable(output_stream=sys.stderr)
            try:
                context = Context(check)
                output = check(context, **config.arguments_for(check))
            except (
                ParameterError,
                DomainError,
                IrreducibleCombinationError,
                InvalidArgumentException,
            ) as e:
                self._fail(ctx, e)
            finally:
                if verbose:
                    GlobalLogger.disable()

            sections = output if isinstance(output, list) else [output]
            report = Report(config=config, sections=sections)
            rendered = report.render()
            if output_file:
                with open(output_file, "w") as f:
                    print(rendered, file=f)
            else:
                click.echo(rendered)
            ctx.exit(report.exit_code)

        return click.Command(
            name=check.name,
            help=self._generate_help_text(check),
            callback=command_func,
            params=params,
        )

    @staticmethod
    def _fail(ctx: click.Context, error: Exception):
        click.echo(f"error: {error}", err=True)
        ctx.exit(USAGE_ERROR)

    def _generate_help_text(self, check: Check) -> str:
        help_text = check.description
        if check.examples:
            help_text += "\n\nExamples:\n"
            for block in check.examples_text():
                help_text += "\n\b\n" + block + "\n"
        return help_text


def main():
    CLI()()


if __name__ == "__main__":
    main()
