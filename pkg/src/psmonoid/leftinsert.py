"""Left insertion of a symbol into a PS tableau, and the left PS algorithm."""

from __future__ import annotations

import enum
from typing import Sequence

from .tableau import Tableau, Variant, is_canonical_word


class InsertionCase(enum.Enum):
    CASE_A = "A"
    CASE_B1 = "B1"
    CASE_B2 = "B2"


def split_step(pending: Sequence, column: Sequence, variant: Variant) -> tuple[tuple, tuple]:
    """One scan over ``pending + column``.

    Returns the decreasing subsequence of the concatenation and the leftover
    symbols, which form a prefix of ``column``.
    """
    word = tuple(pending) + tuple(column)
    if not word:
        return (), ()
    chain = [word[0]]
    rest = []
    last = word[0]
    for s in word[1:]:
        if variant.descends(last, s):
            chain.append(s)
            last = s
        else:
            rest.append(s)
    return tuple(chain), tuple(rest)


def classify_insertion_step(pending: Sequence, column: Sequence, variant) -> InsertionCase:
    variant = Variant.parse(variant)
    pending, column = tuple(pending), tuple(column)
    if not is_canonical_word(pending + column, variant):
        return InsertionCase.CASE_A
    d, _ = split_step(pending, column, variant)
    if d == pending + column:
        return InsertionCase.CASE_B1
    return InsertionCase.CASE_B2


def insert_left(a, t: Tableau, cases: list | None = None) -> Tableau:
    """Tableau of ``a`` followed by the reading of ``t``.

    When ``cases`` is a list, the :class:`InsertionCase` of every step is
    appended to it.
    """
    variant = t.variant
    pending: tuple = (a,)
    out = []
    for column in t.columns:
        if cases is not None:
            cases.append(classify_insertion_step(pending, column, variant))
        d, pending = split_step(pending, column, variant)
        out.append(d)
    if pending:
        out.append(pending)
    return Tableau(variant, tuple(out))


def from_word_left(word: Sequence, variant, cases: list | None = None) -> Tableau:
    """Build the tableau of ``word`` by left-inserting its symbols from the last to the first."""
    t = Tableau.empty(Variant.parse(variant))
    for a in reversed(word):
        t = insert_left(a, t, cases)
    return t
