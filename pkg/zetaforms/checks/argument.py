import json
from fractions import Fraction
from typing import Any, List, Optional


class Argument:
    def __init__(
        self,
        name: str,
        description: str,
        type: str,
        required: bool = False,
        default: Optional[Any] = None,
    ):
        self.name = name
        self.description = description
        self.type = type
        self.required = required
        self.default = (
            self.convert(default) if default is not None else None
        )

    def convert(self, value: Any) -> Any:
        """
        Convert a raw (usually command line) value to the argument's type.
        Lists of ints accept "1,2,3" or a JSON list; rationals accept "p/q".
        """
        if value is None or not isinstance(value, str):
            return value

        type_str = self.type.lower()
        if type_str == "int":
            return int(value)
        elif type_str == "bool":
            return value.lower() in ("true", "1", "yes")
        elif type_str == "rational":
            return Fraction(value)
        elif type_str == "list[int]":
            value = value.strip()
            if value.startswith("["):
                parsed = json.loads(value)
                if not isinstance(parsed, list):
                    raise ValueError(f"expected a list, got {type(parsed)}")
                return [int(item) for item in parsed]
            return [int(item) for item in value.split(",") if item.strip()]
        return value

    def __str__(self) -> str:
        out = f"{self.name} - {self.type} - Required: "
        out += f"{self.required} - "
        if self.default is not None:
            out += f"Default: {self.default} - "
        out += f"{self.description}"

        return out

    def __repr__(self) -> str:
        return self.__str__()

    def to_json(self) -> dict:
        default = self.default
        if isinstance(default, Fraction):
            default = str(default)
        return {
            "name": self.name,
            "description": self.description,
            "type": self.type,
            "required": self.required,
            "default": default,
        }


class InvalidArgumentException(Exception):
    def __init__(
        self,
        check_name: str,
        missing_required_args: List[str],
        extraneous_args: List[str],
    ):
        self.__check_name = check_name
        self.__missing_required_args = missing_required_args
        self.__extraneous_args = extraneous_args
        super().__init__(str(self))

    def __str__(self):
        out = f"Check {self.__check_name} was improperly called\n"

        if self.__missing_required_args:
            out += (
                "Missing required arguments: "
                + ", ".join(self.__missing_required_args)
                + "\n"
            )
        if self.__extraneous_args:
            out += (
                "Extraneous arguments: "
                + ", ".join(self.__extraneous_args)
                + "\n"
            )

        return out
