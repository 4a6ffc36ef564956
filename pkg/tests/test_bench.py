import random

import pytest

from psmonoid.bench import (
    ALGORITHMS,
    CSV_FIELDS,
    count_comparisons,
    increasing_word,
    random_word,
    rows_to_csv,
    run_bench,
)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_single_letter_costs_at_most_one_comparison(algorithm):
    comps, _ = count_comparisons(algorithm, (1,))
    assert comps in (0, 1)


def test_count_is_deterministic():
    w = random_word(5, 60, random.Random(1))
    assert count_comparisons("left", w)[0] == count_comparisons("left", w)[0]


def test_increasing_word():
    assert increasing_word(4) == (1, 2, 3, 4)


def test_run_bench_and_csv():
    rows = run_bench("right", [8, 16], rank=3, seed=2)
    assert [r.length for r in rows] == [8, 16] and all(r.n == 3 for r in rows)
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(CSV_FIELDS)
    assert lines[1].startswith("right,3,8,")
    again = run_bench("right", [8, 16], rank=3, seed=2)
    assert [r.comparisons for r in again] == [r.comparisons for r in rows]


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        count_comparisons("bogo", (1, 2))
