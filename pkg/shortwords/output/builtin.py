"""
Plain-text and JSON formatters, plus a reader for the text layout.

Text layout:

    40320                       a lone scalar field prints bare

    degree: 4                   otherwise one "key: value" line per field
    kernel_order: 1
    words:                      lists as indented items
      - g1*g2^4*g1*g2^3
                                a blank line, then the table (if any)
    class  size  centralizer
    1A     1     24
"""

import json
from typing import Any

import yaml

from .base import BaseFormatter, CommandResult


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


def _is_scalar(value: Any) -> bool:
    return not isinstance(value, list | tuple | dict)


class TextFormatter(BaseFormatter):
    """Whitespace-aligned text, stable byte-for-byte for fixed inputs."""

    def render(self, result: CommandResult) -> str:
        fields = result.fields
        if result.table is None and len(fields) == 1:
            (value,) = fields.values()
            if _is_scalar(value):
                return _scalar(value)

        lines: list[str] = []
        for key, value in fields.items():
            if isinstance(value, dict):
                if not value:
                    lines.append(f"{key}: {{}}")
                    continue
                lines.append(f"{key}:")
                lines.extend(f"  {k}: {_scalar(v)}" for k, v in value.items())
            elif isinstance(value, list | tuple):
                if not value:
                    lines.append(f"{key}: []")
                    continue
                lines.append(f"{key}:")
                lines.extend(f"  - {_scalar(item)}" for item in value)
            else:
                lines.append(f"{key}: {_scalar(value)}")

        if result.table is not None:
            if lines:
                lines.append("")
            lines.extend(self._table_lines(result.table))
        return "\n".join(lines)

    @staticmethod
    def _table_lines(rows: list[dict[str, Any]]) -> list[str]:
        if not rows:
            return []
        headers = list(rows[0].keys())
        cells = [headers] + [[_scalar(row[h]) for h in headers] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
        return [
            "  ".join(cell.ljust(width) for cell, width in zip(r, widths, strict=True)).rstrip()
            for r in cells
        ]


class JsonFormatter(BaseFormatter):
    """The result's data model as an indented JSON document."""

    def render(self, result: CommandResult) -> str:
        indent = self.config.get("indent", 2)
        return json.dumps(result.to_dict(), indent=indent, ensure_ascii=False)


def decode_text(text: str, scalar_key: str = "value") -> dict[str, Any]:
    """
    Parse TextFormatter output back into {"fields": ..., "table": ...}.

    The field block is YAML-compatible; table cells are split on whitespace.
    A bare scalar is stored under scalar_key.
    """
    head, _, tail = text.partition("\n\n")
    data: dict[str, Any] = {}

    looks_like_table = "\n" in head and ":" not in head.splitlines()[0]
    if looks_like_table and not tail:
        head, tail = "", head

    if not head:
        data["fields"] = {}
    elif "\n" not in head and ": " not in head and not head.endswith(":"):
        data["fields"] = {scalar_key: yaml.safe_load(head)}
    else:
        data["fields"] = yaml.safe_load(head) or {}

    if tail:
        header, *rows = tail.splitlines()
        keys = header.split()
        data["table"] = [
            dict(zip(keys, (yaml.safe_load(cell) for cell in row.split()), strict=True))
            for row in rows
        ]
    return data
