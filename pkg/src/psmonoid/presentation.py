"""Relation schemas for the PS monoids and a rewriting engine over them.

A left-hand side has the shape ``y u_m ... u_1 x`` and rewrites to
``y x u_m ... u_1``:

* lPS: ``x < y <= u_1 < ... < u_m``
* rPS: ``x <= y < u_1 <= ... <= u_m``

The rPS system is infinite even at finite rank, so rewriting always goes
through :func:`match_schema_at`; :func:`enumerate_rules_lps` exists for
inspection and export only.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .tableau import Variant, canonical_word
from .words import Word, evaluation, format_word, shortlex_less


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {format_word(self.rhs)}"

    def is_valid(self) -> bool:
        return evaluation(self.lhs) == evaluation(self.rhs) and shortlex_less(self.rhs, self.lhs)


@dataclass(frozen=True)
class RuleSchema:
    variant: Variant
    rank: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        if self.rank is not None and self.rank < 1:
            raise ValueError("rank must be positive")


@dataclass(frozen=True)
class RewriteStep:
    position: int
    rule: Rule
    result: Word

    def __str__(self) -> str:
        return f"pos={self.position} {self.rule}"


@dataclass
class RewriteTrace:
    steps: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def lines(self) -> list[str]:
        return [str(s) for s in self.steps]


def enumerate_rules_lps(n: int) -> list[Rule]:
    """Every rule of the finite lPS presentation of rank ``n``."""
    if n < 1:
        raise ValueError("rank must be positive")
    rules = []
    for y in range(1, n + 1):
        above = range(y, n + 1)
        for m in range(1, len(above) + 1):
            for subset in itertools.combinations(above, m):
                u = tuple(sorted(subset, reverse=True))
                for x in range(1, y):
                    rules.append(Rule((y,) + u + (x,), (y, x) + u))
    return rules


def enumerate_rules_rps(n: int, max_length: int) -> list[Rule]:
    """The rPS rules of rank ``n`` whose sides have length at most ``max_length``."""
    rules = []
    for y in range(1, n + 1):
        for m in range(1, max_length - 1):
            for u in itertools.combinations_with_replacement(range(y + 1, n + 1), m):
                u = tuple(sorted(u, reverse=True))
                for x in range(1, y + 1):
                    rules.append(Rule((y,) + u + (x,), (y, x) + u))
    return rules


def _in_run(variant: Variant, y, s) -> bool:
    return s >= y if variant is Variant.LEFT else s > y


def match_schema_at(word: Sequence, i: int, schema: RuleSchema) -> Rule | None:
    """The rule instance whose left-hand side starts at position ``i``, if any.

    At a given start the run ``u`` is unique: it has to be followed by an
    ``x`` below ``y``, and every run symbol sits at or above ``y``.
    """
    variant = schema.variant
    n = len(word)
    if i + 2 >= n:
        return None
    y = word[i]
    if not _in_run(variant, y, word[i + 1]):
        return None
    k = i + 2
    while k < n and _in_run(variant, y, word[k]) and variant.descends(word[k - 1], word[k]):
        k += 1
    if k == n:
        return None
    x = word[k]
    if (variant is Variant.LEFT and not x < y) or (variant is Variant.RIGHT and not x <= y):
        return None
    if schema.rank is not None and max(word[i : k + 1]) > schema.rank:
        return None
    u = tuple(word[i + 1 : k])
    return Rule(tuple(word[i : k + 1]), (y, x) + u)


def single_step_reductions(word: Sequence, schema: RuleSchema) -> list[RewriteStep]:
    word = tuple(word)
    steps = []
    for i in range(len(word)):
        rule = match_schema_at(word, i, schema)
        if rule is not None:
            result = word[:i] + rule.rhs + word[i + len(rule.lhs) :]
            steps.append(RewriteStep(i, rule, result))
    return steps


def normal_form(word: Sequence, variant, rank: int | None = None) -> tuple[Word, RewriteTrace]:
    """Rewrite at the leftmost match until irreducible."""
    schema = RuleSchema(Variant.parse(variant), rank)
    w = tuple(word)
    trace = RewriteTrace()
    start = 0
    while True:
        for i in range(start, len(w)):
            rule = match_schema_at(w, i, schema)
            if rule is not None:
                w = w[:i] + rule.rhs + w[i + len(rule.lhs) :]
                trace.steps.append(RewriteStep(i, rule, w))
                # Only left-hand sides reaching into the rewritten factor are new,
                # and those start at or after the nearest preceding ascent.
                start = _restart_point(w, i, schema.variant)
                break
        else:
            return w, trace


def _restart_point(w: Word, i: int, variant: Variant) -> int:
    # A match starting at p < i spans w[p..i] as y followed by a descending run.
    p = i
    while p > 0 and (variant.descends(w[p - 1], w[p]) or w[p - 1] == w[p]):
        p -= 1
    return max(0, p - 1)


def is_irreducible(word: Sequence, variant, rank: int | None = None) -> bool:
    schema = RuleSchema(Variant.parse(variant), rank)
    return all(match_schema_at(word, i, schema) is None for i in range(len(word)))


@dataclass
class ConfluenceReport:
    variant: Variant
    rank: int
    max_length: int
    words_checked: int = 0
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _confluence_chunk(args) -> tuple[int, int, list]:
    variant, rank, length = args
    schema = RuleSchema(variant, rank)
    words = pairs = 0
    bad = []
    for w in itertools.product(range(1, rank + 1), repeat=length):
        words += 1
        reducts = single_step_reductions(w, schema)
        forms = [normal_form(s.result, variant, rank)[0] for s in reducts]
        for (s1, f1), (s2, f2) in itertools.combinations(zip(reducts, forms), 2):
            pairs += 1
            if f1 != f2:
                bad.append((w, s1.result, s2.result, f1, f2))
    return words, pairs, bad


def check_local_confluence(variant, n: int, max_length: int, workers: int = 1) -> ConfluenceReport:
    """Exhaustively join every pair of one-step reducts of words up to ``max_length``."""
    variant = Variant.parse(variant)
    report = ConfluenceReport(variant, n, max_length)
    jobs = [(variant, n, length) for length in range(max_length + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_confluence_chunk, jobs))
    else:
        results = [_confluence_chunk(j) for j in jobs]
    for words, pairs, bad in results:
        report.words_checked += words
        report.pairs_checked += pairs
        report.violations.extend(bad)
    report.violations.sort()
    return report


def non_fp_witness(i: int) -> tuple[Word, Word]:
    """The pair ``1 2^i 1`` and ``1 1 2^i``, equal in every rPS monoid of rank >= 2."""
    if i < 1:
        raise ValueError("i must be positive")
    u = (1,) + (2,) * i + (1,)
    v = (1, 1) + (2,) * i
    if canonical_word(u, Variant.RIGHT) != canonical_word(v, Variant.RIGHT):
        raise AssertionError("rPS tableaux differ")
    return u, v


def rules_text(rules: Sequence[Rule]) -> str:
    return "\n".join(str(r) for r in rules)
