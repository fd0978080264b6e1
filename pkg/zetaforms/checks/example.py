from __future__ import annotations

from typing import Dict, Optional


class Example:
    """A worked command line invocation shown in a check's help text."""

    def __init__(
        self,
        name: str,
        args: Dict[str, str],
        output: Optional[str] = None,
        description: Optional[str] = None,
    ):
        self.name = name
        self.args = args
        self.output = output
        self.description = description

    def command_line(self, check_name: str) -> str:
        flags = " ".join(
            f"--{arg}" if value is True else f"--{arg} {value}"
            for arg, value in self.args.items()
        )
        return f"zetaforms {check_name} {flags}".rstrip()

    @classmethod
    def ExampleBlock(cls, check_name: str, example: Example) -> str:
        out = ""
        if example.description:
            out += f"{example.description}\n"
        out += f"$ {example.command_line(check_name)}"

        if example.output:
            out += f"\nExpect: {example.output}"

        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "args": self.args,
            "output": self.output,
        }
