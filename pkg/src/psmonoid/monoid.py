"""Monoid level API: word problem, products, growth and identities."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .tableau import Tableau, Variant, canonical_word, from_word_right
from .words import Word, WordError, check_rank, evaluation, words_of_length

IDENTITY_VARIABLES = "xyzw"


@dataclass(frozen=True)
class MonoidSpec:
    variant: Variant
    rank: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        if self.rank is not None and self.rank < 1:
            raise ValueError("rank must be at least 1")

    @classmethod
    def parse(cls, text: str) -> "MonoidSpec":
        """``"lps"``, ``"rps"``, ``"lps3"``, ``"rps_2"`` and similar."""
        t = text.strip().lower().replace("_", "")
        if t[:3] not in ("lps", "rps"):
            raise ValueError(f"unknown monoid {text!r}")
        rank = int(t[3:]) if t[3:] else None
        return cls(Variant.LEFT if t[:3] == "lps" else Variant.RIGHT, rank)

    @property
    def name(self) -> str:
        base = "lps" if self.variant is Variant.LEFT else "rps"
        return base if self.rank is None else f"{base}{self.rank}"

    @property
    def strict(self) -> bool:
        return self.variant is Variant.RIGHT

    def require_rank(self) -> int:
        if self.rank is None:
            raise ValueError(f"{self.name}: this operation needs a finite rank")
        return self.rank

    def check(self, word: Sequence[int]) -> Word:
        word = tuple(word)
        check_rank(word, self.rank)
        return word

    def canonical(self, word: Sequence[int]) -> Word:
        return canonical_word(self.check(word), self.variant)

    def tableau(self, word: Sequence[int]) -> Tableau:
        return from_word_right(self.check(word), self.variant)

    def generators(self) -> range:
        return range(1, self.require_rank() + 1)


def equiv(u: Sequence[int], v: Sequence[int], m: MonoidSpec) -> bool:
    u, v = m.check(u), m.check(v)
    if len(u) != len(v):
        return False
    return canonical_word(u, m.variant) == canonical_word(v, m.variant)


def multiply(u: Sequence[int], v: Sequence[int], m: MonoidSpec) -> Word:
    """Product of two elements given by their canonical words."""
    u, v = m.check(u), m.check(v)
    for w in (u, v):
        if canonical_word(w, m.variant) != w:
            raise WordError(f"{w!r} is not a canonical word of {m.name}")
    return canonical_word(u + v, m.variant)


@dataclass
class GrowthTable:
    monoid: MonoidSpec
    entries: list = field(default_factory=list)

    def counts(self) -> list[int]:
        return [c for _, c in self.entries]

    def __getitem__(self, n: int) -> int:
        return self.entries[n][1]

    def to_json(self) -> str:
        return json.dumps(
            {"monoid": self.monoid.name, "entries": [{"N": n, "count": c} for n, c in self.entries]}
        )

    def to_csv(self) -> str:
        return "\n".join(["N,count"] + [f"{n},{c}" for n, c in self.entries])

    def to_table(self) -> str:
        width = max(len(str(c)) for _, c in self.entries)
        lines = [f"{'N':>3}  {'count':>{max(width, 5)}}"]
        lines += [f"{n:>3}  {c:>{max(width, 5)}}" for n, c in self.entries]
        return "\n".join(lines)


def growth(m: MonoidSpec, max_n: int, backend: str | None = None) -> GrowthTable:
    """Breadth first over right multiplication by generators.

    Relations preserve length, so level ``N`` of the search is exactly the set
    of elements of length ``N``; the table reports running totals.
    """
    rank = m.require_rank()
    table = GrowthTable(m, [(0, 1)])
    frontier = np.zeros((1, 0), dtype=np.int64)
    total = 1
    gens = np.arange(1, rank + 1, dtype=np.int64)
    for n in range(1, max_n + 1):
        f = frontier.shape[0]
        grown = np.empty((f * rank, n), dtype=np.int64)
        grown[:, : n - 1] = np.repeat(frontier, rank, axis=0)
        grown[:, n - 1] = np.tile(gens, f)
        lengths = np.full(f * rank, n, dtype=np.int64)
        canon = _kernels.canonical_rows(grown, lengths, m.strict, backend)
        frontier = np.unique(canon, axis=0)
        total += frontier.shape[0]
        table.entries.append((n, total))
    return table


def growth_bruteforce(m: MonoidSpec, max_n: int) -> GrowthTable:
    """Count distinct tableaux over every word of length at most ``max_n``."""
    rank = m.require_rank()
    table = GrowthTable(m, [])
    total = 0
    for n in range(max_n + 1):
        total += len({canonical_word(w, m.variant) for w in words_of_length(rank, n)})
        table.entries.append((n, total))
    return table


def rps_growth_bound(n: int, big_n: int) -> int:
    """Upper bound on the number of rPS tableaux of rank ``n`` with at most ``big_n`` entries.

    A tableau is a sequence of at most ``n`` columns, each a weakly decreasing
    word of length at most ``big_n``, and there are ``comb(n + big_n, big_n)``
    such words.  The smaller ``n * comb(n + big_n, big_n)`` is exceeded from
    rank 2 on (63 elements of rps2 with length at most 6, against 56).
    """
    return comb(n + big_n, big_n) ** n


@dataclass(frozen=True)
class IdentityTerm:
    lhs: str
    rhs: str

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            if not side:
                raise ValueError("identity sides must be non-empty")
            bad = set(side) - set(IDENTITY_VARIABLES)
            if bad:
                raise ValueError(f"identity variables must come from {IDENTITY_VARIABLES!r}, got {sorted(bad)}")

    @classmethod
    def parse(cls, text: str) -> "IdentityTerm":
        lhs, _, rhs = text.partition("=")
        return cls(lhs.strip(), rhs.strip())

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"

    @property
    def variables(self) -> str:
        return "".join(sorted(set(self.lhs) | set(self.rhs), key=IDENTITY_VARIABLES.index))

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def substitute(self, sub: dict) -> tuple[Word, Word]:
        def side(s):
            return tuple(a for var in s for a in sub[var])

        return side(self.lhs), side(self.rhs)


def substitutions(variables: str, rank: int, max_len: int) -> Iterator[dict]:
    """Substitutions by words of length ``<= max_len`` (empty word included).

    Ordered by total length, then variable by variable in shortlex order, so
    the first failing one is the smallest counterexample.
    """
    k = len(variables)
    for total in range(k * max_len + 1):
        for lengths in itertools.product(range(max_len + 1), repeat=k):
            if sum(lengths) != total:
                continue
            for words in itertools.product(*(words_of_length(rank, n) for n in lengths)):
                yield dict(zip(variables, words))


def check_identity(identity: IdentityTerm, m: MonoidSpec, max_sub_len: int) -> dict | None:
    """First substitution on which the two sides differ in ``m``, or ``None``."""
    rank = m.require_rank()
    if identity.is_trivial():
        return None
    for sub in substitutions(identity.variables, rank, max_sub_len):
        u, v = identity.substitute(sub)
        if len(u) != len(v) or canonical_word(u, m.variant) != canonical_word(v, m.variant):
            return sub
    return None


@dataclass
class IdentityWitness:
    identity: IdentityTerm
    position: int
    substitution: dict
    lhs_word: Word
    rhs_word: Word
    lhs_bottom: int
    rhs_bottom: int

    @property
    def refutes(self) -> bool:
        return self.lhs_bottom != self.rhs_bottom


def minimal_identity_witness(n: int, identity: IdentityTerm) -> IdentityWitness:
    """Refute a short two-variable identity in the rPS monoid of rank ``n``.

    At the first position ``j`` where the sides differ, the lhs variable gets
    ``s = m...21`` and the rhs variable gets ``s`` with the letter ``j``
    removed, where ``m`` is the identity length.  The lhs then contains the
    strictly increasing subsequence ``12...m`` and the rhs does not, so the
    bottom rows of their rPS tableaux differ in length.
    """
    lhs, rhs = identity.lhs, identity.rhs
    if identity.is_trivial():
        raise ValueError("identity is trivial")
    if len(identity.variables) != 2:
        raise ValueError("identity must use exactly two variables")
    if len(lhs) != len(rhs):
        raise ValueError("identity sides must have equal length")
    length = len(lhs)
    if length > n:
        raise ValueError(f"identity length {length} exceeds the rank {n}")
    j = next(i for i in range(length) if lhs[i] != rhs[i]) + 1
    s = tuple(range(length, 0, -1))
    t = tuple(a for a in s if a != j)
    sub = {lhs[j - 1]: s, rhs[j - 1]: t}
    u, v = identity.substitute(sub)
    tu, tv = from_word_right(u, Variant.RIGHT), from_word_right(v, Variant.RIGHT)
    return IdentityWitness(identity, j, sub, u, v, len(tu.columns), len(tv.columns))


def candidate_identities(max_len: int, variables: str = "xy") -> Iterator[IdentityTerm]:
    """Non-trivial identities with sides of equal length and equal variable content."""
    for n in range(1, max_len + 1):
        words = ["".join(p) for p in itertools.product(variables, repeat=n)]
        for a, b in itertools.combinations(words, 2):
            if evaluation(a) == evaluation(b):
                yield IdentityTerm(a, b)


@dataclass
class IdentitySearchResult:
    identity: IdentityTerm
    counterexample: dict | None


def search_identities(m: MonoidSpec, max_id_len: int, max_sub_len: int, variables: str = "xy") -> list[IdentitySearchResult]:
    return [
        IdentitySearchResult(idt, check_identity(idt, m, max_sub_len))
        for idt in candidate_identities(max_id_len, variables)
    ]


@dataclass
class EmbeddingReport:
    rank: int
    generators: list
    products_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def decreasing_words_ending_in_one(n: int) -> list[Word]:
    out = []
    for k in range(n):
        for top in itertools.combinations(range(n, 1, -1), k):
            out.append(tuple(top) + (1,))
    return sorted(out, key=lambda w: (len(w), w))


def free_embedding_check(n: int, max_products: int) -> EmbeddingReport:
    """Products of strictly decreasing words ending in 1 never collide in lps_n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = decreasing_words_ending_in_one(n)
    report = EmbeddingReport(n, gens)
    seen: dict = {}
    for k in range(1, max_products + 1):
        for factors in itertools.product(gens, repeat=k):
            word = tuple(a for f in factors for a in f)
            t = from_word_right(word, Variant.LEFT)
            report.products_checked += 1
            if t.columns != factors:
                report.failures.append(("columns", factors))
            key = t.reading()
            if key in seen and seen[key] != factors:
                report.failures.append(("collision", factors, seen[key]))
            seen[key] = factors
    return report
