"""
Class table rows with short-word representatives.
"""

from dataclasses import dataclass

from ..perm.generators import GeneratorSet
from ..search.lookup import lookup_word
from ..search.options import LookupOptions
from .classes import ClassTable


@dataclass(frozen=True)
class ClassRow:
    name: str
    word: str
    representative: str
    size: int
    centralizer_order: int
    powers: dict[int, str]

    def to_dict(self) -> dict:
        return {
            "class": self.name,
            "word": self.word,
            "representative": self.representative,
            "size": self.size,
            "centralizer_order": self.centralizer_order,
            "powers": {f"{p}P": name for p, name in self.powers.items()},
        }


def class_table_rows(
    table: ClassTable, gens: GeneratorSet, opts: LookupOptions | None = None
) -> list[ClassRow]:
    """One row per class, the representative rewritten as a short word in gens."""
    rows = []
    for index, c in enumerate(table.classes, start=1):
        found = lookup_word(gens, c.representative, opts)
        rows.append(
            ClassRow(
                name=c.name,
                word=found.rendered,
                representative=str(c.representative),
                size=c.size,
                centralizer_order=c.centralizer_order,
                powers={p: table.class_name(pm[index]) for p, pm in sorted(table.power_maps.items())},
            )
        )
    return rows
