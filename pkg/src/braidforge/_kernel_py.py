"""Pure-Python rewrite kernel.

Words here are raw bytes (one letter code per byte) together with a
256-byte involution table mapping each code to its inverse code.  The
functions below are the inner loops of free reduction, neighbor
generation for the relation searches, and chain replay; braidforge
_speedups provides a compiled twin with identical signatures, and
kernel.py picks one at import time.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"


def free_reduce_bytes(w: bytes, inv: bytes) -> bytes:
    """Cancel adjacent inverse pairs until none remain (single stack scan)."""
    stack = bytearray()
    for c in w:
        if stack and stack[-1] == inv[c]:
            stack.pop()
        else:
            stack.append(c)
    return bytes(stack)


def is_reduced(w: bytes, inv: bytes) -> bool:
    return all(w[k + 1] != inv[w[k]] for k in range(len(w) - 1))


def reduce_with_events(w: bytes, inv: bytes) -> tuple[bytes, list[int]]:
    """Free reduction that also reports where each cancellation happened.

    Returns (reduced, events) where each event is the position of the
    left letter of a cancelled pair *in the word as it stood at that
    moment*.  Replaying the deletions at those positions in order turns w
    into the reduced word, which is exactly what the chain validator does.
    """
    stack = bytearray()
    events: list[int] = []
    for c in w:
        if stack and stack[-1] == inv[c]:
            events.append(len(stack) - 1)
            stack.pop()
        else:
            stack.append(c)
    return bytes(stack), events


def splice(w: bytes, pos: int, cut: int, repl: bytes) -> bytes:
    return w[:pos] + repl + w[pos + cut:]


def find_matches(w: bytes, patterns: list[bytes]) -> list[tuple[int, int]]:
    """All (position, pattern_index) occurrences, in scan order."""
    out: list[tuple[int, int]] = []
    for mi, pat in enumerate(patterns):
        start = w.find(pat)
        while start != -1:
            out.append((start, mi))
            start = w.find(pat, start + 1)
    out.sort()
    return out


def neighbors(w: bytes, patterns: list[bytes], replacements: list[bytes],
              inv: bytes, max_len: int,
              insert_codes: bytes) -> list[tuple[bytes, int, int]]:
    """Distinct freely reduced words one rewrite away from w.

    Moves are (a) replacing an occurrence of patterns[mi] by
    replacements[mi], reported as (word, pos, mi), and (b) inserting the
    cancelling pair (c, inv[c]) for c in insert_codes at any position,
    reported as (word, pos, -1 - c).  Results longer than max_len, equal
    to w, or duplicating an earlier result are dropped.
    """
    out: list[tuple[bytes, int, int]] = []
    seen = {w}
    for mi, pat in enumerate(patterns):
        repl = replacements[mi]
        plen = len(pat)
        start = w.find(pat)
        while start != -1:
            nw = free_reduce_bytes(w[:start] + repl + w[start + plen:], inv)
            if len(nw) <= max_len and nw not in seen:
                seen.add(nw)
                out.append((nw, start, mi))
            start = w.find(pat, start + 1)
    for c in insert_codes:
        pair = bytes((c, inv[c]))
        for pos in range(len(w) + 1):
            nw = free_reduce_bytes(w[:pos] + pair + w[pos:], inv)
            if len(nw) <= max_len and nw not in seen:
                seen.add(nw)
                out.append((nw, pos, -1 - c))
    return out
