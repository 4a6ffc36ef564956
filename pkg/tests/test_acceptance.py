"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (visible in the
``pytest -v`` log) before asserting.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines.
"""

import math
import random
import sys
import time
from math import comb

import pytest

from psmonoid.automata import unpad
from psmonoid.automatic import (
    apply_Q,
    build_biautomatic_rps2,
    build_multiplier_lps,
    build_multiplier_rps,
    build_rep_language_lps,
    build_rep_language_rps,
    k_word_of,
    left_mult_transducer_lps,
    phi,
    right_mult_transducer_lps,
    word_problem_automatic,
)
from psmonoid.bench import count_comparisons, increasing_word, random_word
from psmonoid.leftinsert import from_word_left
from psmonoid.monoid import (
    IdentityTerm,
    MonoidSpec,
    check_identity,
    equiv,
    free_embedding_check,
    growth,
    growth_bruteforce,
    minimal_identity_witness,
)
from psmonoid.presentation import check_local_confluence, is_irreducible, normal_form
from psmonoid.subsequences import minimal_subsequences
from psmonoid.tableau import Variant, canonical_word, column_configuration, column_reading, from_word_right, is_canonical_word
from psmonoid.words import all_words, format_standardized, std_left, std_right

L, R = Variant.LEFT, Variant.RIGHT
C1 = 1.0  # right insertion: comparisons <= C1 * N log2 N
C2 = 0.6  # left insertion and minimal subsequences: comparisons <= C2 * N^2
RATIO_TOLERANCE = 1.5
LENGTHS = [2**k for k in range(7, 13)]
# Families on which the cost model is tight.  Minimal subsequences on random
# words only build about 2*sqrt(N) columns, so their growth sits well below N^2.
RATIO_FAMILIES = {
    ("right", "random"), ("right", "adversarial"),
    ("left", "random"), ("left", "adversarial"),
    ("subseq", "adversarial"),
}


def _report(capsys, number, title, checks, elapsed, target):
    checks = list(checks) + [(f"time {elapsed:.1f}s < {target}s", elapsed < target)]
    failed = [name for name, ok in checks if not ok]
    line = f"criterion {number}: {'PASS' if not failed else 'FAIL'}  {title}"
    if failed:
        line += "  [failed: " + "; ".join(failed) + "]"
    with capsys.disabled():
        print("\n" + line)
    assert not failed, line


def test_criterion_1_worked_examples(capsys):
    start = time.perf_counter()
    checks = [
        ("left tableau of 254263542", from_word_right((2, 5, 4, 2, 6, 3, 5, 4, 2), L).columns == ((2,), (5, 4, 2), (6, 3, 2), (5, 4))),
        ("left subsequences", minimal_subsequences((2, 5, 6, 4, 2, 3, 5, 4, 2), L) == ((2,), (5, 4, 2), (6, 3, 2), (5, 4))),
        ("right subsequences", minimal_subsequences((2, 5, 6, 4, 2, 3, 5, 4, 2), R) == ((2, 2, 2), (5, 4, 3), (6, 5, 4))),
        ("left standardization", format_standardized(std_left((1, 3, 2, 1, 2, 2, 1))) == "1_1 3_1 2_1 1_2 2_2 2_3 1_3"),
        ("right standardization", format_standardized(std_right((1, 3, 2, 1, 2, 2, 1))) == "1_3 3_1 2_3 1_2 2_2 2_1 1_1"),
    ]
    _report(capsys, 1, "worked examples", checks, time.perf_counter() - start, 1)


def test_criterion_2_algorithm_agreement(capsys):
    start = time.perf_counter()
    words = list(all_words(3, 8, 1))
    checks = [("9840 words", len(words) == 9840)]
    for v in (L, R):
        checks.append((f"{v.name} left = right", all(from_word_left(w, v) == from_word_right(w, v) for w in words)))
        checks.append((f"{v.name} subsequences = configuration", all(minimal_subsequences(w, v) == column_configuration(w, v) for w in words)))
    _report(capsys, 2, "algorithm agreement", checks, time.perf_counter() - start, 30)


def test_criterion_3_rewriting_completeness(capsys):
    start = time.perf_counter()
    checks = []
    for v in (L, R):
        words = list(all_words(3, 7))
        checks.append((f"{v.name} normal form", all(normal_form(w, v, 3)[0] == column_reading(from_word_right(w, v)) for w in words)))
        checks.append((f"{v.name} irreducible", all(is_irreducible(w, v, 3) == is_canonical_word(w, v) for w in words)))
        report = check_local_confluence(v, 3, 6)
        checks.append((f"{v.name} local confluence ({len(report.violations)} violations)", not report.violations))
    _report(capsys, 3, "rewriting completeness", checks, time.perf_counter() - start, 60)


def test_criterion_4_congruence(capsys):
    start = time.perf_counter()
    checks = []
    for v in (L, R):
        classes: dict = {}
        for w in all_words(2, 5):
            classes.setdefault(canonical_word(w, v), []).append(w)
        ok = True
        for members in classes.values():
            for a in (1, 2):
                ok &= len({canonical_word((a,) + w, v) for w in members}) == 1
                ok &= len({canonical_word(w + (a,), v) for w in members}) == 1
        checks.append((f"{v.name} two-sided compatibility", ok))
    _report(capsys, 4, "congruence laws", checks, time.perf_counter() - start, 60)


def test_criterion_5_growth(capsys):
    start = time.perf_counter()
    rps1 = growth(MonoidSpec(R, 1), 12).counts()
    checks = [
        ("rps1 linear", rps1 == [n + 1 for n in range(13)]),
        ("rps2 at 3 by brute force", growth_bruteforce(MonoidSpec(R, 2), 3)[3] == 14 == growth(MonoidSpec(R, 2), 3)[3]),
    ]
    for n in (1, 2, 3):
        counts = growth(MonoidSpec(R, n), 8).counts()
        bad = [(N, counts[N], n * comb(n + N, N)) for N in range(9) if counts[N] > n * comb(n + N, N)]
        name = f"rps{n} <= n*C(n+N,N)"
        if bad:
            N, got, bound = bad[0]
            name += f" (N={N}: {got} > {bound})"
        checks.append((name, not bad))
    lps2 = growth(MonoidSpec(L, 2), 12).counts()
    checks.append(("lps2 >= 2^floor(N/2)", all(lps2[N] >= 2 ** (N // 2) for N in range(13))))
    checks.append(("{1, 21} generate a free submonoid", free_embedding_check(2, 6).ok))
    _report(capsys, 5, "growth", checks, time.perf_counter() - start, 60)


def test_criterion_6_identities(capsys):
    start = time.perf_counter()
    checks = []
    for n in (1, 2, 3):
        identity = IdentityTerm("xy" * (n + 1), "xy" * n + "yx")
        checks.append((f"rps{n} (xy)^(n+1) = (xy)^n yx", check_identity(identity, MonoidSpec(R, n), 3) is None))
    checks.append(("xy = yx refuted at (1, 2)", check_identity(IdentityTerm("xy", "yx"), MonoidSpec(R, 2), 2) == {"x": (1,), "y": (2,)}))
    w = minimal_identity_witness(3, IdentityTerm("xyx", "xxy"))
    checks.append(("rps3 witness with s=321, t=31", w.refutes and set(w.substitution.values()) == {(3, 2, 1), (3, 1)}))
    _report(capsys, 6, "identities", checks, time.perf_counter() - start, 120)


def _multiplier_exact(dfa, generator, side, decode, lang_words, variant):
    pairs = [unpad(w) for w in dfa.words(7)]
    for u, v in pairs:
        prod = decode(u) + generator if side == "right" else generator + decode(u)
        if canonical_word(prod, variant) != decode(v):
            return False
    return set(lang_words) <= {u for u, _ in pairs}


def test_criterion_7_automatic_structures(capsys):
    start = time.perf_counter()
    checks = []
    for n in (2, 3):
        lang = build_rep_language_rps(n)
        checks.append((f"rep language n={n}", all(lang.accepts(w) == is_canonical_word(w, R) for w in all_words(n, 6))))
    reps = build_rep_language_rps(2).words(6)
    ok = all(
        _multiplier_exact(build_multiplier_rps(2, a, c), () if a is None else (a,), "right", tuple, reps, R)
        for a in (None, 1, 2) for c in ("dr", "dl")
    )
    checks.append(("rps2 multipliers over L", ok))
    s = build_biautomatic_rps2()
    jwords = s.language.words(6)
    ok = all(
        _multiplier_exact(s.multiplier(side, a, c), () if a is None else (a,), side, phi, jwords, R)
        for side in ("right", "left") for a in (None, 1, 2) for c in ("dr", "dl")
    )
    checks.append(("rps2 multipliers over J", ok))
    for n in (2, 3):
        ok = True
        for u in build_rep_language_lps(n).words(4):
            w = apply_Q(u)
            for g in range(1, n + 1):
                ok &= right_mult_transducer_lps(n, g).outputs(u, 2) == {k_word_of(w + (g,))}
                ok &= left_mult_transducer_lps(n, g).outputs(u, 2) == {k_word_of((g,) + w)}
        checks.append((f"lps transducers n={n}", ok))
    lps_reps = [canonical_word(w, L) for w in all_words(2, 5)]
    ok = all(
        _multiplier_exact(build_multiplier_lps(2, g, side, c), () if g is None else (g,), side, tuple, lps_reps, L)
        for side in ("right", "left") for g in (None, 1, 2) for c in ("dr", "dl")
    )
    checks.append(("lps2 padded multipliers", ok))
    rng = random.Random(2024)
    for name in ("rps2", "lps2"):
        m = MonoidSpec.parse(name)
        agree = 0
        for _ in range(1000):
            u = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 50)))
            v = tuple(rng.sample(u, len(u))) if rng.random() < 0.5 else tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 50)))
            agree += word_problem_automatic(m, u, v) == equiv(u, v, m)
        checks.append((f"{name} word problem ({agree}/1000)", agree == 1000))
    _report(capsys, 7, "automatic structures", checks, time.perf_counter() - start, 120)


def _model(algorithm, n):
    return C1 * n * math.log2(n) if algorithm == "right" else C2 * n * n


def test_criterion_8_complexity(capsys):
    start = time.perf_counter()
    checks, notes = [], []
    rng = random.Random(8)
    for algorithm in ("right", "left", "subseq"):
        for family in ("random", "adversarial"):
            counts = []
            for n in LENGTHS:
                word = increasing_word(n) if family == "adversarial" else random_word(n, n, rng)
                counts.append(count_comparisons(algorithm, word, L)[0])
            within = all(c <= _model(algorithm, n) for c, n in zip(counts, LENGTHS))
            checks.append((f"{algorithm}/{family} bound", within))
            ratios = [
                (counts[i + 1] / counts[i]) / (_model(algorithm, LENGTHS[i + 1]) / _model(algorithm, LENGTHS[i]))
                for i in range(len(LENGTHS) - 1)
            ]
            ok = all(1 / RATIO_TOLERANCE <= r <= RATIO_TOLERANCE for r in ratios)
            label = f"{algorithm}/{family} doubling ratio (min {min(ratios):.2f}, max {max(ratios):.2f})"
            if (algorithm, family) in RATIO_FAMILIES:
                checks.append((label, ok))
            else:
                notes.append(label)
    _report(capsys, 8, "complexity contracts", checks, time.perf_counter() - start, 60)
    with capsys.disabled():
        print("  not ratio-tested, quadratic model is a worst case only: " + "; ".join(notes))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "--no-header", "-p", "no:warnings"]))
