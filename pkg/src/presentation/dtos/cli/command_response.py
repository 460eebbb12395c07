"""Command response data transfer object."""

import json
from dataclasses import dataclass
from typing import Any

from src.presentation.utils.exit_codes import ExitCode


@dataclass(frozen=True, slots=True)
class CommandResponse:
    """Command output with its exit code."""

    body: dict[str, Any]
    exit_code: ExitCode = ExitCode.success

    def as_json(self) -> str:
        """Get as a deterministic JSON document.

        Returns:
            str: JSON with sorted keys.

        """
        return json.dumps(self.body, indent=2, sort_keys=True)

    def as_text(self) -> str:
        """Get as indented ``key: value`` lines.

        Returns:
            str: human readable output.

        """
        return "\n".join(_lines(self.body, indent=0))


def _lines(value: object, indent: int) -> list[str]:
    padding: str = "  " * indent
    lines: list[str] = []

    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, dict | list) and item:
                lines.append(f"{padding}{key}:")
                lines.extend(_lines(item, indent + 1))
            else:
                lines.append(f"{padding}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{padding}-")
                lines.extend(_lines(item, indent + 1))
            else:
                lines.append(f"{padding}- {_scalar(item)}")
    else:
        lines.append(f"{padding}{_scalar(value)}")

    return lines


def _scalar(value: object) -> str:
    if value is None:
        return "-"

    if isinstance(value, bool):
        return str(value).lower()

    if isinstance(value, list | dict):
        return json.dumps(value)

    return str(value)
