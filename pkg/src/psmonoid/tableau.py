"""Patience sorting tableaux and right insertion.

Columns are stored top to bottom, so the column reading of a tableau is the
plain concatenation of its columns and the bottom entry of a column is its
last element.
"""

from __future__ import annotations

import enum
import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import IndexedSymbol, Word, format_word


class Variant(enum.Enum):
    """``LEFT``: strict columns, weak bottom row.  ``RIGHT``: weak columns, strict bottom row."""

    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def parse(cls, text: "str | Variant") -> "Variant":
        if isinstance(text, Variant):
            return text
        t = text.strip().lower()
        if t in ("left", "l", "lps"):
            return cls.LEFT
        if t in ("right", "r", "rps"):
            return cls.RIGHT
        raise ValueError(f"unknown variant {text!r}")

    def descends(self, a, b) -> bool:
        """Can ``b`` follow ``a`` inside a column (reading top to bottom)?"""
        return b < a if self is Variant.LEFT else b <= a

    def ascends(self, a, b) -> bool:
        """Can bottom entry ``b`` sit to the right of bottom entry ``a``?"""
        return a <= b if self is Variant.LEFT else a < b


def is_column_word(word: Sequence, variant: Variant) -> bool:
    return len(word) > 0 and all(variant.descends(word[i], word[i + 1]) for i in range(len(word) - 1))


@dataclass(frozen=True)
class Tableau:
    variant: Variant
    columns: tuple = ()

    @classmethod
    def empty(cls, variant: Variant) -> "Tableau":
        return cls(Variant.parse(variant), ())

    @classmethod
    def from_columns(cls, variant, columns: Iterable[Sequence]) -> "Tableau":
        t = cls(Variant.parse(variant), tuple(tuple(c) for c in columns))
        t.validate()
        return t

    def validate(self) -> None:
        for col in self.columns:
            if not is_column_word(col, self.variant):
                raise ValueError(f"invalid {self.variant.value} column {col!r}")
        bottoms = self.bottom_row()
        for a, b in zip(bottoms, bottoms[1:]):
            if not self.variant.ascends(a, b):
                raise ValueError(f"invalid {self.variant.value} bottom row {bottoms!r}")

    def bottom_row(self) -> tuple:
        return tuple(col[-1] for col in self.columns)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    def reading(self) -> Word:
        return tuple(a for col in self.columns for a in col)

    def insert(self, a) -> "Tableau":
        return insert_right(self, a)

    def to_json(self) -> dict:
        return {"variant": self.variant.value, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: "dict | str") -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_columns(data["variant"], data["columns"])

    def config_text(self) -> str:
        return "|".join(format_word(c) for c in self.columns) if self.columns else "e"

    def render(self, color: bool = False) -> str:
        return render_ascii(self, color=color)


def _insert_position(bottoms: Sequence, a, variant: Variant) -> int:
    # Left: first bottom > a; Right: first bottom >= a.
    if variant is Variant.LEFT:
        return bisect_right(bottoms, a)
    return bisect_left(bottoms, a)


def insert_right(t: Tableau, a) -> Tableau:
    """Insert ``a`` at the bottom of the first admissible column (or a new one)."""
    bottoms = t.bottom_row()
    j = _insert_position(bottoms, a, t.variant)
    cols = list(t.columns)
    if j == len(cols):
        cols.append((a,))
    else:
        cols[j] = cols[j] + (a,)
    return Tableau(t.variant, tuple(cols))


def _build_columns(word: Sequence, variant: Variant) -> list[list]:
    cols: list[list] = []
    bottoms: list = []
    for a in word:
        j = _insert_position(bottoms, a, variant)
        if j == len(cols):
            cols.append([a])
            bottoms.append(a)
        else:
            cols[j].append(a)
            bottoms[j] = a
    return cols


def from_word_right(word: Sequence, variant) -> Tableau:
    """Build the tableau of ``word`` by right insertion of its symbols in order."""
    variant = Variant.parse(variant)
    return Tableau(variant, tuple(tuple(c) for c in _build_columns(word, variant)))


def column_reading(t: Tableau) -> Word:
    return t.reading()


def shape(t: Tableau) -> tuple[int, ...]:
    return t.shape()


def canonical_word(word: Sequence, variant) -> Word:
    variant = Variant.parse(variant)
    return tuple(a for col in _build_columns(word, variant) for a in col)


def is_canonical_word(word: Sequence, variant) -> bool:
    return tuple(word) == canonical_word(word, variant)


def column_configuration(word: Sequence, variant) -> tuple[tuple, ...]:
    return from_word_right(word, variant).columns


def placements(word: Sequence, variant) -> list[tuple[int, int]]:
    """Final box of each letter of ``word`` as ``(column, height from bottom)``, 0-based."""
    variant = Variant.parse(variant)
    cols: list[list[int]] = []
    bottoms: list = []
    for i, a in enumerate(word):
        j = _insert_position(bottoms, a, variant)
        if j == len(cols):
            cols.append([i])
            bottoms.append(a)
        else:
            cols[j].append(i)
            bottoms[j] = a
    where = [(0, 0)] * len(word)
    for c, col in enumerate(cols):
        h = len(col)
        for k, i in enumerate(col):
            where[i] = (c, h - 1 - k)
    return where


def standardize_tableau(t: Tableau) -> Tableau:
    """Attach occurrence indexes in the order matching the variant's word standardization."""
    seen: dict = {}
    indexed: list[list] = [[None] * len(c) for c in t.columns]
    if t.variant is Variant.LEFT:
        order = [(c, k) for c in range(len(t.columns)) for k in range(len(t.columns[c]))]
    else:
        order = [
            (c, k)
            for c in reversed(range(len(t.columns)))
            for k in reversed(range(len(t.columns[c])))
        ]
    for c, k in order:
        a = t.columns[c][k]
        seen[a] = seen.get(a, 0) + 1
        indexed[c][k] = IndexedSymbol(a, seen[a])
    return Tableau(t.variant, tuple(tuple(c) for c in indexed))


def destandardize_tableau(t: Tableau) -> Tableau:
    cols = tuple(tuple(s.underlying for s in c) for c in t.columns)
    return Tableau.from_columns(t.variant, cols)


def render_ascii(t: Tableau, color: bool = False) -> str:
    """Bottom-aligned boxes, one ``[a]`` cell per entry."""
    if not t.columns:
        return "(empty)"
    cells = [[str(a) for a in col] for col in t.columns]
    width = max(len(s) for col in cells for s in col)
    height = max(len(col) for col in cells)
    lines = []
    for row in range(height, 0, -1):
        parts = []
        for col in cells:
            if len(col) >= row:
                s = col[len(col) - row].rjust(width)
                box = f"[{s}]"
                if color and row == 1:
                    box = f"\x1b[1m{box}\x1b[0m"
                parts.append(box)
            else:
                parts.append(" " * (width + 2))
        lines.append(" ".join(parts).rstrip())
    return "\n".join(lines)
