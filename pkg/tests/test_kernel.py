"""The compiled kernel and the pure kernel must be indistinguishable.

The compiled twin is optional; when it did not build, the cross-checks
here are skipped and only the pure kernel's own contracts run.
"""

import random

import pytest

from braidforge import kernel
from braidforge import _kernel_py as pure
from braidforge.relations import standard_moves

try:
    from braidforge import _speedups as fast
except ImportError:
    fast = None

needs_fast = pytest.mark.skipif(fast is None,
                                reason="compiled kernel not built")


def random_cases(seed=7, count=200):
    table = standard_moves(3)
    alphabet = sorted(set(b"".join(table.patterns)) | set(table.insert_codes))
    rng = random.Random(seed)
    for _ in range(count):
        yield bytes(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))


def test_free_reduce_is_reduced_and_stable():
    inv = standard_moves(3).inverse_table
    for w in random_cases():
        r = pure.free_reduce_bytes(w, inv)
        assert pure.is_reduced(r, inv)
        assert pure.free_reduce_bytes(r, inv) == r


def test_reduce_with_events_replays():
    inv = standard_moves(3).inverse_table
    for w in random_cases(seed=8):
        reduced, events = pure.reduce_with_events(w, inv)
        cur = w
        for pos in events:
            assert cur[pos + 1] == inv[cur[pos]]
            cur = cur[:pos] + cur[pos + 2:]
        assert cur == reduced
        assert reduced == pure.free_reduce_bytes(w, inv)


def test_splice():
    assert pure.splice(b"abcdef", 2, 3, b"XY") == b"abXYf"
    assert pure.splice(b"abc", 0, 0, b"Z") == b"Zabc"
    assert pure.splice(b"abc", 3, 0, b"Z") == b"abcZ"


def test_find_matches_scan_order():
    assert pure.find_matches(b"abab", [b"ab", b"ba"]) == [
        (0, 0), (1, 1), (2, 0)]
    assert pure.find_matches(b"aaa", [b"aa"]) == [(0, 0), (1, 0)]


def test_neighbors_substitutions_are_reduced_and_bounded():
    table = standard_moves(3)
    inv = table.inverse_table
    for w in random_cases(seed=9, count=50):
        reduced = pure.free_reduce_bytes(w, inv)
        for nw, pos, mi in pure.neighbors(reduced, list(table.patterns),
                                          list(table.replacements), inv,
                                          len(reduced) + 2, b""):
            assert pure.is_reduced(nw, inv)
            assert len(nw) <= len(reduced) + 2
            assert nw != reduced


def test_kernel_module_exposes_one_implementation():
    assert kernel.IMPLEMENTATION in ("pure", "compiled")
    assert kernel.free_reduce_bytes(b"", b"") == b""


@needs_fast
def test_compiled_matches_pure_free_reduce():
    inv = standard_moves(3).inverse_table
    for w in random_cases(seed=10, count=300):
        assert fast.free_reduce_bytes(w, inv) == pure.free_reduce_bytes(w, inv)
        assert fast.is_reduced(w, inv) == pure.is_reduced(w, inv)


@needs_fast
def test_compiled_matches_pure_events_and_matches():
    inv = standard_moves(3).inverse_table
    pats = list(standard_moves(3).patterns)
    for w in random_cases(seed=11, count=200):
        assert fast.reduce_with_events(w, inv) == pure.reduce_with_events(w, inv)
        assert fast.find_matches(w, pats) == pure.find_matches(w, pats)


@needs_fast
def test_compiled_matches_pure_neighbors():
    table = standard_moves(3)
    inv = table.inverse_table
    for w in random_cases(seed=12, count=100):
        reduced = pure.free_reduce_bytes(w, inv)
        a = fast.neighbors(reduced, list(table.patterns),
                           list(table.replacements), inv, len(reduced) + 2,
                           table.insert_codes)
        b = pure.neighbors(reduced, list(table.patterns),
                           list(table.replacements), inv, len(reduced) + 2,
                           table.insert_codes)
        assert a == b


@needs_fast
def test_compiled_is_selected_by_default():
    import os

    if os.environ.get("BRAIDFORGE_PURE"):
        pytest.skip("pure kernel forced via environment")
    assert kernel.IMPLEMENTATION == "compiled"
