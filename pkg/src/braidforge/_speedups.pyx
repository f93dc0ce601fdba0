# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py.  Same signatures, same results.

Only the loops that profile hot are typed; everything stays on bytes in
and bytes out so the two kernels are interchangeable.
"""

IMPLEMENTATION = "compiled"


def free_reduce_bytes(bytes w, bytes inv):
    cdef const unsigned char* src = w
    cdef const unsigned char* table = inv
    cdef Py_ssize_t n = len(w)
    cdef bytearray out = bytearray(n)
    cdef unsigned char* dst
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t k
    cdef unsigned char c
    if n == 0:
        return b""
    dst = out
    for k in range(n):
        c = src[k]
        if top > 0 and dst[top - 1] == table[c]:
            top -= 1
        else:
            dst[top] = c
            top += 1
    return bytes(out[:top])


def is_reduced(bytes w, bytes inv):
    cdef const unsigned char* src = w
    cdef const unsigned char* table = inv
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t k
    for k in range(n - 1):
        if src[k + 1] == table[src[k]]:
            return False
    return True


def reduce_with_events(bytes w, bytes inv):
    cdef const unsigned char* src = w
    cdef const unsigned char* table = inv
    cdef Py_ssize_t n = len(w)
    cdef bytearray out = bytearray(n)
    cdef unsigned char* dst
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t k
    cdef unsigned char c
    cdef list events = []
    if n == 0:
        return b"", events
    dst = out
    for k in range(n):
        c = src[k]
        if top > 0 and dst[top - 1] == table[c]:
            events.append(top - 1)
            top -= 1
        else:
            dst[top] = c
            top += 1
    return bytes(out[:top]), events


def splice(bytes w, Py_ssize_t pos, Py_ssize_t cut, bytes repl):
    return w[:pos] + repl + w[pos + cut:]


def find_matches(bytes w, list patterns):
    cdef list out = []
    cdef Py_ssize_t mi, start
    cdef bytes pat
    for mi in range(len(patterns)):
        pat = patterns[mi]
        start = w.find(pat)
        while start != -1:
            out.append((start, mi))
            start = w.find(pat, start + 1)
    out.sort()
    return out


def neighbors(bytes w, list patterns, list replacements, bytes inv,
              Py_ssize_t max_len, bytes insert_codes):
    cdef list out = []
    cdef set seen = {w}
    cdef Py_ssize_t mi, start, pos, plen
    cdef bytes pat, repl, nw, pair
    cdef unsigned char c
    for mi in range(len(patterns)):
        pat = patterns[mi]
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
