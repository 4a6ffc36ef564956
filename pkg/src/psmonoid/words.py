"""Words over ranked alphabets of positive integers.

A word is a plain ``tuple`` of symbols.  Symbols are positive integers, but
every algorithm in the package only needs ``<``/``<=`` so indexed symbols
(and other totally ordered values) work as well.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Sequence

Word = tuple

EMPTY_TOKEN = "e"


class IndexedSymbol(NamedTuple):
    """A symbol tagged with an occurrence index; orders as ``(underlying, index)``."""

    underlying: int
    index: int

    def __str__(self) -> str:
        return f"{self.underlying}_{self.index}"


class WordError(ValueError):
    """Raised for malformed word text or symbols outside the rank in force."""


def parse_word(text: str) -> Word:
    """Parse the textual word format.

    ``"e"`` (or the empty string) is the empty word, ``"2542"`` is read digit by
    digit and ``"10,2,11"`` is read as comma separated integers.
    """
    text = text.strip()
    if text in ("", EMPTY_TOKEN, "ε"):
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise WordError(f"malformed word {text!r}") from None
    if any(a < 1 for a in word):
        raise WordError(f"symbols must be positive integers: {text!r}")
    return word


def format_word(word: Iterable) -> str:
    word = tuple(word)
    if not word:
        return EMPTY_TOKEN
    if all(isinstance(a, int) and 1 <= a <= 9 for a in word):
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def check_rank(word: Sequence[int], rank: int | None) -> None:
    if rank is None:
        return
    for a in word:
        if not 1 <= a <= rank:
            raise WordError(f"symbol {a} is outside the alphabet A_{rank}")


def evaluation(word: Iterable) -> dict:
    """Number of occurrences of each symbol."""
    return dict(Counter(word))


def std_left(word: Sequence) -> tuple[IndexedSymbol, ...]:
    seen: Counter = Counter()
    out = []
    for a in word:
        seen[a] += 1
        out.append(IndexedSymbol(a, seen[a]))
    return tuple(out)


def std_right(word: Sequence) -> tuple[IndexedSymbol, ...]:
    seen: Counter = Counter()
    out = []
    for a in reversed(word):
        seen[a] += 1
        out.append(IndexedSymbol(a, seen[a]))
    return tuple(reversed(out))


def destandardize(word: Iterable[IndexedSymbol]) -> Word:
    return tuple(s.underlying for s in word)


def is_standardized(word: Sequence[IndexedSymbol]) -> bool:
    """Indexes of every underlying symbol are exactly ``1..k``."""
    seen: dict[int, set[int]] = {}
    for s in word:
        seen.setdefault(s.underlying, set()).add(s.index)
    counts = Counter(s.underlying for s in word)
    return all(seen[a] == set(range(1, counts[a] + 1)) for a in counts)


def format_standardized(word: Iterable[IndexedSymbol]) -> str:
    return " ".join(str(s) for s in word)


def shortlex_key(word: Sequence) -> tuple:
    return (len(word), tuple(word))


def shortlex_less(u: Sequence, v: Sequence) -> bool:
    """``u`` precedes ``v`` in the length-plus-lexicographic order."""
    if len(u) != len(v):
        return len(u) < len(v)
    return tuple(u) < tuple(v)


def words_of_length(rank: int, length: int) -> Iterator[Word]:
    """All words of exactly ``length`` over ``A_rank`` in lexicographic order."""
    return itertools.product(range(1, rank + 1), repeat=length)


def all_words(rank: int, max_length: int, min_length: int = 0) -> Iterator[Word]:
    """All words over ``A_rank`` with length in ``[min_length, max_length]``, shortlex order."""
    for length in range(min_length, max_length + 1):
        yield from words_of_length(rank, length)
