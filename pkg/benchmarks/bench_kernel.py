"""Time the byte-string kernels: compiled extension against pure Python.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernel.py

The numbers that matter are the search-shaped ones (find_matches and
neighbors); those dominate the oracle's runtime.  If the compiled
extension is missing, only the pure column is printed.
"""

import random
import time

from braidforge import _kernel_py as pure
from braidforge.relations import standard_moves
from braidforge.words import parse_braid_word

try:
    from braidforge import _speedups as fast
except ImportError:
    fast = None


def random_words(count, strands, length, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        text = " ".join(rng.choice("sStTv") + str(rng.randint(1, strands - 1))
                        for _ in range(length))
        out.append(parse_braid_word(text, strands).codes)
    return out


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    table = standard_moves(4)
    inv = table.inverse_table
    patterns = list(table.patterns)
    replacements = list(table.replacements)
    words = random_words(400, 4, 40, seed=20240822)

    cases = [
        ("free_reduce_bytes", lambda m: [m.free_reduce_bytes(w, inv)
                                         for w in words]),
        ("reduce_with_events", lambda m: [m.reduce_with_events(w, inv)
                                          for w in words]),
        ("find_matches", lambda m: [m.find_matches(w, patterns)
                                    for w in words]),
        ("neighbors", lambda m: [m.neighbors(w, patterns, replacements,
                                             inv, len(w) + 2, b"")
                                 for w in words]),
    ]

    impls = [("pure", pure)] + ([("compiled", fast)] if fast else [])
    print(f"{'kernel':<20}" + "".join(f"{name:>12}" for name, _ in impls)
          + ("     speedup" if fast else ""))
    for label, body in cases:
        times = [timed(lambda m=mod: body(m)) for _, mod in impls]
        row = f"{label:<20}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if fast:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)
    if fast is None:
        print("\ncompiled extension not built; pure numbers only")


if __name__ == "__main__":
    main()
