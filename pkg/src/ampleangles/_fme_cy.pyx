# cython: language_level=3
"""Compiled Fourier-Motzkin kernel; same contract as ``_fme_py``.

Coefficients stay arbitrary-precision Python ints (they grow under
elimination), so the speedup comes from removing interpreter overhead in
the pairing loops, not from native arithmetic.
"""

from math import gcd

BACKEND = "cython"


def normalize(a, c, strict):
    """Scale a row to primitive integer form (gcd 1, sign preserved)."""
    cdef Py_ssize_t i, n = len(a)
    g = 0
    for i in range(n):
        g = gcd(g, a[i])
    g = gcd(g, c)
    if g > 1:
        a = tuple(v // g for v in a)
        c = c // g
    return a, c, strict


def reduce_rows(rows):
    """Normalize, deduplicate and prune; ``None`` signals infeasibility."""
    cdef dict best = {}
    cdef bint strict
    for a, c, s in rows:
        strict = s
        if not any(a):
            if c < 0 or (c == 0 and strict):
                return None
            continue
        a, c, strict = normalize(a, c, strict)
        cur = best.get(a)
        key = (c, not strict)
        if cur is None or key < cur:
            best[a] = key
    return [(a, c, not ns) for a, (c, ns) in best.items()]


def eliminate(rows, Py_ssize_t j):
    """Project away variable ``j`` (one Fourier-Motzkin step)."""
    cdef list pos = []
    cdef list neg = []
    cdef list out = []
    cdef Py_ssize_t i, k, n, npos, nneg
    for row in rows:
        aj = row[0][j]
        if aj > 0:
            pos.append(row)
        elif aj < 0:
            neg.append(row)
        else:
            out.append(row)
    npos = len(pos)
    nneg = len(neg)
    if npos == 0 or nneg == 0:
        return out
    cdef tuple ap, an, a
    cdef list acc
    cdef bint sp, sn
    for i in range(npos):
        ap, cp, sp = pos[i]
        alpha = ap[j]
        n = len(ap)
        for k in range(nneg):
            an, cn, sn = neg[k]
            gamma = -an[j]
            acc = [0] * n
            for m in range(n):
                acc[m] = gamma * ap[m] + alpha * an[m]
            out.append((tuple(acc), gamma * cp + alpha * cn, sp or sn))
    return out


def feasible(rows, Py_ssize_t nvars):
    """Exact feasibility of a mixed strict/non-strict rational system."""
    rows = reduce_rows(rows)
    if rows is None:
        return False
    cdef Py_ssize_t j, best_j
    cdef long long p, n, cost, best_cost
    cdef bint have
    while rows:
        best_j = -1
        best_cost = 0
        have = False
        for j in range(nvars):
            p = 0
            n = 0
            for row in rows:
                aj = row[0][j]
                if aj > 0:
                    p += 1
                elif aj < 0:
                    n += 1
            if p == 0 and n == 0:
                continue
            cost = p * n
            if not have or cost < best_cost:
                best_j = j
                best_cost = cost
                have = True
                if cost == 0:
                    break
        if best_j < 0:
            return True
        rows = reduce_rows(eliminate(rows, best_j))
        if rows is None:
            return False
    return True
