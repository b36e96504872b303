"""
Base abstract class for result formatters.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CommandResult:
    """
    Serializable outcome of one CLI command.

    Attributes:
        command: Command name
        fields: Ordered scalar, list or mapping values
        table: Optional rows sharing the same keys
    """

    command: str
    fields: dict[str, Any] = field(default_factory=dict)
    table: list[dict[str, Any]] | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"command": self.command, "fields": self.fields}
        if self.table is not None:
            data["table"] = self.table
        return data


class BaseFormatter(ABC):
    """Base class for result formatters."""

    def __init__(self, config: dict[str, Any] | None = None):
        """
        Initialize with optional configuration.

        Args:
            config: Formatter-specific options
        """
        self.config = config or {}

    @abstractmethod
    def render(self, result: CommandResult) -> str:
        """
        Render a result for stdout.

        Args:
            result: Command outcome

        Returns:
            Text without a trailing newline
        """
        pass

    @classmethod
    def get_formatter_name(cls) -> str:
        """Identifier, e.g. 'json' for JsonFormatter."""
        return cls.__name__.replace("Formatter", "").lower()

    @classmethod
    def get_description(cls) -> str:
        return cls.__doc__ or "No description available"
