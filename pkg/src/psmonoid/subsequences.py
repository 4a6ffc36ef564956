"""Decreasing subsequences and left-to-right minimal subsequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .tableau import Variant


@dataclass
class MarkedWord:
    """A word whose positions can be struck out without rebuilding it."""

    word: tuple
    taken: list = field(default_factory=list)

    def __post_init__(self):
        self.word = tuple(self.word)
        if not self.taken:
            self.taken = [False] * len(self.word)
        self._first = 0

    def first_free(self) -> int | None:
        while self._first < len(self.word) and self.taken[self._first]:
            self._first += 1
        return self._first if self._first < len(self.word) else None

    def extract_decreasing(self, variant: Variant) -> list[int]:
        """Greedy chain over the free positions; marks and returns its positions."""
        start = self.first_free()
        if start is None:
            return []
        positions = [start]
        last = self.word[start]
        for p in range(start + 1, len(self.word)):
            if self.taken[p]:
                continue
            if variant.descends(last, self.word[p]):
                positions.append(p)
                last = self.word[p]
        for p in positions:
            self.taken[p] = True
        return positions


def decreasing_subsequence(word: Sequence, variant) -> tuple[tuple, tuple[int, ...]]:
    """The chain starting at the first symbol, each step taking the next smaller
    (``LEFT``) or not-larger (``RIGHT``) symbol.  Returns ``(subsequence, positions)``."""
    variant = Variant.parse(variant)
    positions = MarkedWord(word).extract_decreasing(variant)
    return tuple(word[p] for p in positions), tuple(positions)


def minimal_subsequences_with_positions(word: Sequence, variant) -> tuple[tuple[tuple, tuple[int, ...]], ...]:
    variant = Variant.parse(variant)
    marked = MarkedWord(word)
    out = []
    while True:
        positions = marked.extract_decreasing(variant)
        if not positions:
            break
        out.append((tuple(marked.word[p] for p in positions), tuple(positions)))
    return tuple(out)


def minimal_subsequences(word: Sequence, variant) -> tuple[tuple, ...]:
    """Iterated decreasing subsequences; equals the column configuration of ``word``."""
    return tuple(sub for sub, _ in minimal_subsequences_with_positions(word, variant))
