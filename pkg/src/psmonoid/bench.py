"""Comparison-count and timing harness for the insertion algorithms."""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

from .instrument import ComparisonCounter, wrap
from .leftinsert import from_word_left
from .subsequences import minimal_subsequences
from .tableau import Variant, from_word_right

ALGORITHMS = ("right", "left", "subseq")
CSV_FIELDS = ("algorithm", "n", "length", "comparisons", "seconds")


def _runner(algorithm: str, variant: Variant) -> Callable[[Sequence], object]:
    if algorithm == "right":
        return lambda w: from_word_right(w, variant)
    if algorithm == "left":
        return lambda w: from_word_left(w, variant)
    if algorithm == "subseq":
        return lambda w: minimal_subsequences(w, variant)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def random_word(rank: int, length: int, rng: random.Random) -> tuple:
    return tuple(rng.randint(1, rank) for _ in range(length))


def increasing_word(length: int) -> tuple:
    """Worst case for all three algorithms: every letter opens a new column."""
    return tuple(range(1, length + 1))


def count_comparisons(algorithm: str, word: Sequence, variant=Variant.LEFT) -> tuple[int, float]:
    run = _runner(algorithm, Variant.parse(variant))
    counter = ComparisonCounter()
    wrapped = wrap(word, counter)
    start = time.perf_counter()
    run(wrapped)
    return counter.count, time.perf_counter() - start


@dataclass
class BenchRow:
    algorithm: str
    n: int
    length: int
    comparisons: int
    seconds: float


def run_bench(
    algorithm: str,
    lengths: Sequence[int],
    rank: int | None = None,
    seed: int = 0,
    variant=Variant.LEFT,
    adversarial: bool = False,
) -> list[BenchRow]:
    """One row per length; ``rank=None`` draws symbols from ``A_length``."""
    rng = random.Random(seed)
    rows = []
    for length in lengths:
        n = rank or max(length, 1)
        word = increasing_word(length) if adversarial else random_word(n, length, rng)
        comps, secs = count_comparisons(algorithm, word, variant)
        rows.append(BenchRow(algorithm, n, length, comps, secs))
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["seconds"] = f"{row.seconds:.6f}"
        writer.writerow(d)
    return buf.getvalue()


def n_log_n(n: int) -> float:
    return n * math.log2(n) if n > 1 else 1.0


def n_squared(n: int) -> float:
    return float(n * n)
