"""Comparison counting for the complexity checks.

Symbols are wrapped in :class:`Tally` proxies that share one counter; every
ordering comparison between two proxies (or a proxy and a plain value) bumps
it exactly once.  The insertion algorithms are generic over totally ordered
alphabets, so they run unchanged on wrapped words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass
class ComparisonCounter:
    count: int = 0


def _raw(x):
    return x.value if isinstance(x, Tally) else x


class Tally:
    __slots__ = ("value", "counter")

    def __init__(self, value, counter: ComparisonCounter):
        self.value = value
        self.counter = counter

    def __lt__(self, other):
        self.counter.count += 1
        return self.value < _raw(other)

    def __le__(self, other):
        self.counter.count += 1
        return self.value <= _raw(other)

    def __gt__(self, other):
        self.counter.count += 1
        return self.value > _raw(other)

    def __ge__(self, other):
        self.counter.count += 1
        return self.value >= _raw(other)

    def __eq__(self, other):
        return self.value == _raw(other)

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Tally({self.value!r})"


def wrap(word: Sequence, counter: ComparisonCounter) -> tuple:
    return tuple(Tally(a, counter) for a in word)


def unwrap(word) -> tuple:
    return tuple(_raw(a) for a in word)
