"""Automatic and biautomatic structures for the finite-rank PS monoids.

Representative languages are :class:`Nfa` objects, multiplication relations
are :class:`PairTransducer` objects, and the padded multiplier automata come
from compiling those relations with :func:`padded_automaton`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .automata import (
    Nfa,
    PairTransducer,
    find_partner,
    pad_left,
    pad_right,
    padded_automaton,
)
from .leftinsert import split_step
from .monoid import MonoidSpec
from .tableau import Variant, canonical_word, is_canonical_word
from .words import Word, check_rank


INF = "inf"


def _coding(coding: str) -> str:
    c = coding.lower()
    if c in ("dr", "right", "delta_r"):
        return "right"
    if c in ("dl", "left", "delta_l"):
        return "left"
    raise ValueError(f"unknown coding {coding!r}")


def _pad(relation: PairTransducer, coding: str, max_lag: int) -> Nfa:
    return padded_automaton(relation, _coding(coding), max_lag).minimal()


# rPS ----------------------------------------------------------------------

def _column_language_rps(n: int, a: int) -> Nfa:
    """Non-empty weakly decreasing words over ``A_n`` ending in ``a``."""
    parts = [Nfa.symbol(k).star() for k in range(n, a, -1)]
    return Nfa.epsilon().concat(*parts, Nfa.symbol(a).plus())


def _subsets(n: int):
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


def build_rep_language_rps(n: int) -> Nfa:
    """Column readings of rPS tableaux of rank ``n``."""
    if n < 1:
        raise ValueError("rank must be positive")
    pieces = [Nfa.epsilon().concat(*(_column_language_rps(n, a) for a in b)) for b in _subsets(n)]
    return pieces[0].union(*pieces[1:]).trim()


def _rps_multiplier_relation(n: int, j: int | None) -> PairTransducer:
    def diag(a):
        return PairTransducer.diagonal(_column_language_rps(n, a))

    if j is None:
        return PairTransducer.diagonal(build_rep_language_rps(n))
    pieces = []
    for b in _subsets(n):
        if all(j > a for a in b):
            parts = [diag(a) for a in b] + [PairTransducer.pair(None, j)]
        else:
            am = min(a for a in b if a >= j)
            parts = [diag(a) for a in b if a < j]
            parts.append(diag(am).concat(PairTransducer.pair(None, j)))
            parts += [diag(a) for a in b if a > am]
        pieces.append(PairTransducer.identity().concat(*parts))
    return pieces[0].union(*pieces[1:])


def build_multiplier_rps(n: int, a: int | None, coding: str = "dr") -> Nfa:
    """Padded automaton for right multiplication by ``a`` (``None`` is the empty word)."""
    if a is not None and not 1 <= a <= n:
        raise ValueError(f"generator {a} outside A_{n}")
    # One letter is inserted and the rest is copied in step, so a lag of 2 suffices.
    return _pad(_rps_multiplier_relation(n, a), coding, 2)


def nonregularity_demo(n: int, alpha: int) -> tuple[Word, Word]:
    """The pair ``(2^a 1^a, 1^(a+1) 2^a)`` in the left multiplier relation by 1."""
    if n < 2 or alpha < 1:
        raise ValueError("need n >= 2 and alpha >= 1")
    u = (2,) * alpha + (1,) * alpha
    v = (1,) * (alpha + 1) + (2,) * alpha
    assert is_canonical_word(u, Variant.RIGHT) and is_canonical_word(v, Variant.RIGHT)
    assert canonical_word((1,) + u, Variant.RIGHT) == v
    return u, v


# rps_2 biautomatic structure ----------------------------------------------

def build_rep_language_j() -> Nfa:
    two, one = Nfa.symbol(2), Nfa.symbol(1)
    return two.star().concat(one, two.star(), one.star()).union(two.star()).trim()


def phi(word: Sequence[int]) -> Word:
    """Decode a word of J to the rPS column reading it stands for."""
    word = tuple(word)
    if 1 not in word:
        return word
    i = word.index(1)
    rest = word[i + 1 :]
    k = 0
    while k < len(rest) and rest[k] == 2:
        k += 1
    j = len(rest) - k + 1
    if any(s != 1 for s in rest[k:]) or any(s != 2 for s in word[:i]):
        raise ValueError(f"{word!r} is not in J")
    return (2,) * i + (1,) * j + (2,) * k


def phi_inverse(word: Sequence[int]) -> Word:
    """J-representative of the element of rps_2 given by any word over A_2."""
    w = canonical_word(tuple(word), Variant.RIGHT)
    if 1 not in w:
        return w
    i = w.index(1)
    j = w.count(1)
    k = len(w) - i - j
    return (2,) * i + (1,) + (2,) * k + (1,) * (j - 1)


def _j_relations() -> dict:
    p = PairTransducer.pair
    s22, s11 = p(2, 2).star(), p(1, 1).star()
    return {
        ("right", 1): s22.concat(p(1, 1), s22, s11, p(None, 1)).union(s22.concat(p(None, 1))),
        ("right", 2): s22.concat(p(1, 1), s22, p(None, 2), s11).union(s22.concat(p(None, 2))),
        ("left", 1): p(None, 1).concat(s22, p(1, None), s22, s11, p(None, 1)).union(p(None, 1).concat(s22)),
        ("left", 2): p(None, 2).concat(s22, p(1, 1), s22, s11).union(p(None, 2).concat(s22)),
    }


@dataclass
class BiautomaticStructure:
    language: Nfa
    multipliers: dict  # (side, generator or None, coding) -> padded automaton

    def multiplier(self, side: str, a: int | None, coding: str = "dr") -> Nfa:
        return self.multipliers[(side, a, _coding(coding))]


def build_biautomatic_rps2() -> BiautomaticStructure:
    lang = build_rep_language_j()
    mult = {}
    relations = _j_relations()
    relations[("right", None)] = relations[("left", None)] = PairTransducer.diagonal(lang)
    for (side, a), rel in relations.items():
        for coding in ("right", "left"):
            mult[(side, a, coding)] = _pad(rel, coding, 2)
    return BiautomaticStructure(lang, mult)


# lPS ----------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnAlphabet:
    rank: int

    @property
    def letters(self) -> tuple:
        """All strictly decreasing non-empty words, in shortlex order."""
        out = []
        for k in range(1, self.rank + 1):
            out += [tuple(sorted(c, reverse=True)) for c in itertools.combinations(range(1, self.rank + 1), k)]
        return tuple(sorted(out, key=lambda c: (len(c), c)))

    def __len__(self) -> int:
        return 2**self.rank - 1

    def __contains__(self, letter) -> bool:
        letter = tuple(letter)
        return (
            bool(letter)
            and all(1 <= a <= self.rank for a in letter)
            and all(a > b for a, b in zip(letter, letter[1:]))
        )


def letter_text(letter: Sequence[int]) -> str:
    return "e_" + "".join(str(a) for a in letter)


def apply_Q(word: Sequence[Sequence[int]]) -> Word:
    return tuple(a for letter in word for a in letter)


def k_word_of(word: Sequence[int]) -> tuple:
    """The K-representative of the element of an lps monoid given by ``word``."""
    from .tableau import from_word_right

    return from_word_right(tuple(word), Variant.LEFT).columns


def build_rep_language_lps(n: int) -> Nfa:
    """K over E_n: the state is the minimum of the previous letter."""
    if n < 1:
        raise ValueError("rank must be positive")
    sigma = ColumnAlphabet(n)
    k = Nfa()
    states = [k.add_state(label="start")] + [k.add_state(label=f"min{m}") for m in range(1, n + 1)]
    k.initial.add(states[0])
    k.accepting |= set(states)
    for m in range(n + 1):
        for letter in sigma.letters:
            if letter[-1] >= m:
                k.add_transition(states[m], letter, states[letter[-1]])
    return k


def right_mult_transducer_lps(n: int, gamma: int) -> PairTransducer:
    """Right-to-left machine for ``{(u, v) in K x K : u e_gamma = v}``.

    ``seek(m)`` is still looking for the column to insert into and ``copy(m)``
    has inserted; ``m`` is the minimum of the letter just read, which both
    checks membership in K and realizes the guess about the next letter.
    """
    if not 1 <= gamma <= n:
        raise ValueError(f"gamma {gamma} outside A_{n}")
    sigma = ColumnAlphabet(n).letters
    t = PairTransducer(direction="rtl")
    init = t.add_state("init")
    seek = {m: t.add_state(f"seek{m}") for m in range(1, n + 2)}
    copy = {m: t.add_state(f"copy{m}") for m in range(1, n + 1)}
    t.initial.add(init)
    t.accepting |= set(copy.values())
    t.add_transition(init, None, (gamma,), copy[gamma])
    t.add_transition(init, None, None, seek[n + 1])
    for letter in sigma:
        a = letter[-1]
        for m, s in seek.items():
            if gamma < a <= m:
                t.add_transition(s, letter, letter, seek[a])
                t.add_transition(s, letter, letter + (gamma,), copy[gamma])
        for m, s in copy.items():
            if a <= m:
                t.add_transition(s, letter, letter, copy[a])
    return t


def left_mult_transducer_lps(n: int, gamma: int) -> PairTransducer:
    """Left-to-right machine for ``{(u, v) in K x K : e_gamma u = v}``.

    The state holds the pending column still to be pushed rightwards (or
    ``inf`` once insertion is over) and the minimum of the previous input
    letter.
    """
    if not 1 <= gamma <= n:
        raise ValueError(f"gamma {gamma} outside A_{n}")
    sigma = ColumnAlphabet(n).letters
    t = PairTransducer()
    final = t.add_state("flushed")
    t.accepting.add(final)
    index: dict = {}
    todo = []

    def state(pending, prev):
        key = (pending, prev)
        if key not in index:
            name = "inf" if pending == INF else letter_text(pending)
            index[key] = t.add_state(f"{name}/{prev}")
            todo.append(key)
        return index[key]

    t.initial.add(state((gamma,), 0))
    while todo:
        pending, prev = todo.pop()
        src = index[(pending, prev)]
        if pending == INF:
            t.accepting.add(src)
        else:
            t.add_transition(src, None, pending, final)
        for letter in sigma:
            a = letter[-1]
            if a < prev:
                continue
            if pending == INF:
                t.add_transition(src, letter, letter, state(INF, a))
                continue
            chain, rest = split_step(pending, letter, Variant.LEFT)
            t.add_transition(src, letter, chain, state(rest if rest else INF, a))
    return t


def q_transducer(n: int) -> PairTransducer:
    """The homomorphism ``e_alpha -> alpha``."""
    return PairTransducer.homomorphism({c: c for c in ColumnAlphabet(n).letters})


def lps_language(n: int) -> Nfa:
    """Canonical lPS words over A_n, as the image of K under Q."""
    return PairTransducer.diagonal(build_rep_language_lps(n)).compose(q_transducer(n)).image()


def _lps_relation(n: int, gamma: int | None, side: str) -> PairTransducer:
    q = q_transducer(n)
    if gamma is None:
        return PairTransducer.diagonal(lps_language(n))
    if side == "right":
        core = right_mult_transducer_lps(n, gamma)
    elif side == "left":
        core = left_mult_transducer_lps(n, gamma)
    else:
        raise ValueError(f"unknown side {side!r}")
    return q.inverse().compose(core).compose(q)


def build_multiplier_lps(n: int, gamma: int | None, side: str = "right", coding: str = "dr") -> Nfa:
    if gamma is not None and not 1 <= gamma <= n:
        raise ValueError(f"gamma {gamma} outside A_{n}")
    # The left transducer carries a pending column of up to n letters.
    return _pad(_lps_relation(n, gamma, side), coding, n + 2)


# word problem ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _right_multipliers(variant: Variant, n: int) -> dict:
    if variant is Variant.RIGHT:
        return {a: build_multiplier_rps(n, a) for a in range(1, n + 1)}
    return {a: build_multiplier_lps(n, a, "right") for a in range(1, n + 1)}


def representative(m: MonoidSpec, word: Sequence[int]) -> Word:
    """Read ``word`` letter by letter through the right multipliers."""
    n = m.require_rank()
    word = tuple(word)
    check_rank(word, n)
    mult = _right_multipliers(m.variant, n)
    rep: Word = ()
    for a in word:
        nxt = find_partner(mult[a], rep)
        if nxt is None:
            raise RuntimeError(f"multiplier by {a} has no partner for {rep!r}")
        rep = nxt
    return rep


def word_problem_automatic(m: MonoidSpec, u: Sequence[int], v: Sequence[int]) -> bool:
    """Each representative costs one linear pass per letter, so quadratic time overall."""
    return representative(m, u) == representative(m, v)
