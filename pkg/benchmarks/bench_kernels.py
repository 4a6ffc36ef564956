"""Time batch canonicalization: numba kernel against the numpy fallback.

    python3 benchmarks/bench_kernels.py --rank 3 --length 10 --repeat 3
"""

import argparse
import time

import numpy as np

from psmonoid import _kernels


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rank", type=int, default=3)
    parser.add_argument("--length", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    words = _kernels.all_words_matrix(args.rank, args.length)
    lengths = np.full(words.shape[0], args.length, dtype=np.int64)
    print(f"{words.shape[0]} words of length {args.length} over A_{args.rank}")
    results = {}
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    for backend in backends:
        for strict in (False, True):
            # First call compiles the numba kernel; keep it out of the timing.
            _kernels.canonical_rows(words[:1], lengths[:1], strict, backend)
            secs, out = timed(lambda: _kernels.canonical_rows(words, lengths, strict, backend), args.repeat)
            results[(backend, strict)] = out
            variant = "right" if strict else "left"
            print(f"{backend:6s} {variant:5s} {secs * 1e3:9.2f} ms  {words.shape[0] / secs:12.0f} words/s")
    if "numba" in backends:
        same = all(np.array_equal(results[("numpy", s)], results[("numba", s)]) for s in (False, True))
        print("backends agree" if same else "BACKENDS DISAGREE")


if __name__ == "__main__":
    main()
