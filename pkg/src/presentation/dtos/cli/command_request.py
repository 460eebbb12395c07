"""Command request data transfer object."""

from argparse import Namespace
from dataclasses import dataclass, field
from typing import Any, Self

from src.presentation.parsers.errors import InputSyntaxError

GLOBAL_OPTIONS: frozenset[str] = frozenset(
    {"command", "action", "seed", "json", "timing", "verbose"},
)


@dataclass(frozen=True, slots=True)
class CommandRequest:
    """Parsed command line request."""

    subcommand: str
    seed: int
    as_json: bool = False
    timing: bool = False
    verbose: bool = False
    options: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_namespace(cls, namespace: Namespace) -> Self:
        """Make new instance from parsed arguments.

        Args:
            namespace (Namespace): argparse result.

        Returns:
            Self: command request.

        """
        arguments: dict[str, Any] = vars(namespace)
        subcommand: str = arguments["command"]

        if arguments.get("action"):
            subcommand = f"{subcommand} {arguments['action']}"

        return cls(
            subcommand=subcommand,
            seed=arguments["seed"],
            as_json=arguments["json"],
            timing=arguments["timing"],
            verbose=arguments["verbose"],
            options={
                name: value
                for name, value in arguments.items()
                if name not in GLOBAL_OPTIONS
            },
        )

    def get(self, name: str, default: Any = None) -> Any:  # noqa: ANN401
        """Get an option value.

        Args:
            name (str): option destination name.
            default (Any, optional): value for absent options.
                Defaults to None.

        Returns:
            Any: option value.

        """
        value: Any = self.options.get(name)
        return default if value is None else value

    def require(self, name: str, flag: str) -> Any:  # noqa: ANN401
        """Get a mandatory option value.

        Args:
            name (str): option destination name.
            flag (str): flag shown in the error message.

        Raises:
            InputSyntaxError: option missing.

        Returns:
            Any: option value.

        """
        value: Any = self.options.get(name)

        if value is None:
            msg: str = f"{self.subcommand} needs {flag}."
            raise InputSyntaxError(msg)

        return value
