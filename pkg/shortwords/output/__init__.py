"""
Result formatting. Formatters are looked up by name; text and json are built in.
"""

from .base import BaseFormatter, CommandResult
from .builtin import JsonFormatter, TextFormatter, decode_text

_FORMATTERS: dict[str, type[BaseFormatter]] = {}


def register_formatter(formatter_class: type[BaseFormatter]) -> type[BaseFormatter]:
    """Make a formatter available to render() under its get_formatter_name()."""
    _FORMATTERS[formatter_class.get_formatter_name()] = formatter_class
    return formatter_class


def render(result: CommandResult, fmt: str = "text") -> str:
    try:
        formatter_class = _FORMATTERS[fmt]
    except KeyError:
        raise ValueError(
            f"Unknown output format '{fmt}', expected one of {sorted(_FORMATTERS)}"
        ) from None
    return formatter_class().render(result)


register_formatter(TextFormatter)
register_formatter(JsonFormatter)

__all__ = [
    "BaseFormatter",
    "CommandResult",
    "JsonFormatter",
    "TextFormatter",
    "decode_text",
    "register_formatter",
    "render",
]
