"""Inner loops of the diagram layer, compiled with numba when available.

Every kernel is written once as plain Python over numpy integer arrays.  At
import time the public names are bound either to ``numba.njit`` versions of
those functions or to the functions themselves.  Setting the environment
variable ``DELIGNE_O_DISABLE_NUMBA=1`` (or running without numba installed)
selects the plain path; results are identical either way.

Mark codes used by the weight-diagram kernels::

    0 = down (v)   1 = up (^)   2 = circle (o)   3 = cross (x)   4 = diamond (D)
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised through the env flag
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_ENABLED = numba is not None and os.environ.get("DELIGNE_O_DISABLE_NUMBA", "") in ("", "0")

DOWN, UP, CIRCLE, CROSS, DIAMOND = 0, 1, 2, 3, 4


def _jit(fn):
    if NUMBA_ENABLED:
        return numba.njit(cache=True)(fn)
    return fn


# --------------------------------------------------------------------------
# weight and cap diagrams
# --------------------------------------------------------------------------


def _weight_marks(colt, delta, nverts):
    # doubled X: 2*(colt[l] - l) - delta for l < L, then -2l - delta
    L = colt.shape[0]
    par = delta & 1
    tail_top = -2 * L - delta
    out = np.zeros(nverts, dtype=np.int8)
    for j in range(nverts):
        u = 2 * j + par
        pos = False
        neg = False
        if u <= tail_top:
            pos = True
        if -u <= tail_top:
            neg = True
        for l in range(L):
            x = 2 * (colt[l] - l) - delta
            if x == u:
                pos = True
            if x == -u:
                neg = True
        if u == 0:
            out[j] = DIAMOND if pos else CIRCLE
        elif pos and neg:
            out[j] = CROSS
        elif pos:
            out[j] = UP
        elif neg:
            out[j] = DOWN
        else:
            out[j] = CIRCLE
    return out


def _columns_from_marks(marks, delta):
    # returns (status, colt); status 0 ok, 1 bad mark placement, 2 bad counts
    n = marks.shape[0]
    par = delta & 1
    xs = np.empty(2 * n + 1, dtype=np.int64)
    m = 0
    for j in range(n):
        u = 2 * j + par
        c = marks[j]
        if c == DIAMOND:
            if u != 0:
                return 1, np.zeros(0, dtype=np.int64)
            xs[m] = 0
            m += 1
        elif c == UP or c == DOWN:
            if u == 0:
                return 1, np.zeros(0, dtype=np.int64)
            xs[m] = u if c == UP else -u
            m += 1
        elif c == CROSS:
            if u == 0:
                return 1, np.zeros(0, dtype=np.int64)
            xs[m] = u
            xs[m + 1] = -u
            m += 2
        elif c != CIRCLE:
            return 1, np.zeros(0, dtype=np.int64)
    # vertices past the prefix are all down; the count must make the tail zero
    if 2 * m != 2 * n + par - delta:
        return 2, np.zeros(0, dtype=np.int64)
    vals = np.sort(xs[:m])[::-1]
    colt = np.empty(m, dtype=np.int64)
    k = 0
    for l in range(m):
        c = (vals[l] + delta) // 2 + l
        colt[l] = c
        if c > 0:
            k = l + 1
    return 0, colt[:k].copy()


def _cap_pairs(marks, reverse_scan):
    n = marks.shape[0]
    conn = np.zeros(n, dtype=np.bool_)
    caps = np.empty((n, 3), dtype=np.int64)
    nc = 0
    changed = True
    while changed:
        changed = False
        for t in range(n):
            j = n - 1 - t if reverse_scan else t
            if marks[j] != UP or conn[j]:
                continue
            i = j - 1
            while i >= 0:
                if conn[i] or marks[i] == CROSS or marks[i] == CIRCLE:
                    i -= 1
                    continue
                if marks[i] == DOWN or marks[i] == DIAMOND:
                    conn[i] = True
                    conn[j] = True
                    caps[nc, 0] = i
                    caps[nc, 1] = j
                    caps[nc, 2] = 0
                    nc += 1
                    changed = True
                break
    # dotted caps: the two leftmost free non-circle/cross vertices, both up
    while True:
        first = -1
        second = -1
        for v in range(n):
            if conn[v] or marks[v] == CROSS or marks[v] == CIRCLE:
                continue
            if first < 0:
                first = v
            else:
                second = v
                break
        if first < 0 or second < 0 or marks[first] != UP or marks[second] != UP:
            break
        conn[first] = True
        conn[second] = True
        caps[nc, 0] = first
        caps[nc, 1] = second
        caps[nc, 2] = 1
        nc += 1
    return caps[:nc].copy()


# --------------------------------------------------------------------------
# Brauer diagrams: endpoints 0..r-1 bottom, r..r+s-1 top, partner arrays
# --------------------------------------------------------------------------


def _compose(pg, q, r, ph, s):
    """Stack h (r -> s) on g (q -> r); return partner array of h*g and bubble count."""
    out = np.full(q + s, -1, dtype=np.int64)
    seen = np.zeros(r, dtype=np.bool_)
    for start in range(q + s):
        if out[start] >= 0:
            continue
        # walk from an outer endpoint until the other outer endpoint
        if start < q:
            in_g = True
            p = start
        else:
            in_g = False
            p = r + (start - q)
        while True:
            if in_g:
                t = pg[p]
                if t < q:
                    end = t
                    break
                mid = t - q
                seen[mid] = True
                p = mid
                in_g = False
            else:
                t = ph[p]
                if t >= r:
                    end = q + (t - r)
                    break
                seen[t] = True
                p = q + t
                in_g = True
        out[start] = end
        out[end] = start
    bubbles = 0
    for m0 in range(r):
        if seen[m0]:
            continue
        bubbles += 1
        m = m0
        while True:
            seen[m] = True
            a = ph[m]  # h-partner of middle point m, also a middle point
            seen[a] = True
            b = pg[q + a] - q  # g-partner of that point
            if b == m0:
                break
            m = b
    return out, bubbles


def _closure_loops(p, r):
    """Loops obtained by joining top endpoint r+j to bottom endpoint j."""
    n = 2 * r
    seen = np.zeros(n, dtype=np.bool_)
    loops = 0
    for a0 in range(n):
        if seen[a0]:
            continue
        loops += 1
        a = a0
        while True:
            seen[a] = True
            b = p[a]
            seen[b] = True
            c = b + r if b < r else b - r
            if seen[c]:
                break
            a = c
    return loops


def _matching_rank(p):
    n = p.shape[0]
    free = np.ones(n, dtype=np.bool_)
    rank = 0
    for a in range(n):
        if not free[a]:
            continue
        b = p[a]
        digit = 0
        radix = 0
        for c in range(a + 1, n):
            if free[c]:
                if c < b:
                    digit += 1
                radix += 1
        rank = rank * radix + digit
        free[a] = False
        free[b] = False
    return rank


def _matching_unrank(rank, n):
    digits = np.zeros(n // 2, dtype=np.int64)
    k = n // 2 - 1
    while k >= 0:
        radix = n - 1 - 2 * k
        digits[k] = rank % radix
        rank //= radix
        k -= 1
    p = np.full(n, -1, dtype=np.int64)
    for k in range(n // 2):
        a = 0
        while p[a] >= 0:
            a += 1
        d = digits[k]
        c = a + 1
        while True:
            if p[c] < 0:
                if d == 0:
                    break
                d -= 1
            c += 1
        p[a] = c
        p[c] = a
    return p


def _composition_table(r, count):
    """Products of all pairs in B_r: index and bubble tables, h*g at [h, g]."""
    basis = np.empty((count, 2 * r), dtype=np.int64)
    for k in range(count):
        basis[k] = matching_unrank(k, 2 * r)
    idx = np.empty((count, count), dtype=np.int64)
    bub = np.empty((count, count), dtype=np.int64)
    for h in range(count):
        for g in range(count):
            prod, b = compose(basis[g], r, r, basis[h], r)
            idx[h, g] = matching_rank(prod)
            bub[h, g] = b
    return idx, bub


weight_marks = _jit(_weight_marks)
columns_from_marks = _jit(_columns_from_marks)
cap_pairs = _jit(_cap_pairs)
compose = _jit(_compose)
closure_loops = _jit(_closure_loops)
matching_rank = _jit(_matching_rank)
matching_unrank = _jit(_matching_unrank)
composition_table = _jit(_composition_table)
