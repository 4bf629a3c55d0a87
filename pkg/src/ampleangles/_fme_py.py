"""Pure-Python Fourier-Motzkin elimination over exact integers.

Rows encode linear constraints ``sum(a[i] * x[i]) + c  (>|>=)  0`` as
``(a, c, strict)`` with ``a`` a tuple of ints, ``c`` an int and ``strict``
a bool.  Combining a strict constraint with any other yields a strict one.
The compiled twin in ``_fme_cy`` implements the identical interface; the
active backend is chosen in :mod:`ampleangles.fme`.
"""

from math import gcd

BACKEND = "python"


def normalize(a, c, strict):
    """Scale a row to primitive integer form (gcd 1, sign preserved)."""
    g = 0
    for v in a:
        g = gcd(g, v)
    g = gcd(g, c)
    if g > 1:
        a = tuple(v // g for v in a)
        c = c // g
    return a, c, strict


def reduce_rows(rows):
    """Normalize, deduplicate and prune a row list.

    Constant rows are checked and dropped; parallel rows keep only the
    tightest constant (ties broken towards strict).  Returns ``None`` when
    a violated constant row proves infeasibility.
    """
    best = {}
    for a, c, strict in rows:
        if not any(a):
            if c < 0 or (c == 0 and strict):
                return None
            continue
        a, c, strict = normalize(a, c, strict)
        cur = best.get(a)
        if cur is None or (c, not strict) < cur:
            best[a] = (c, not strict)
    return [(a, c, not ns) for a, (c, ns) in best.items()]


def eliminate(rows, j):
    """Project away variable ``j`` (one Fourier-Motzkin step).

    Input rows must already be reduced; the result is not reduced.  When
    all rows with nonzero j-coefficient share a sign, the variable is
    unbounded on one side and those rows are simply dropped.
    """
    pos = []
    neg = []
    out = []
    for row in rows:
        aj = row[0][j]
        if aj > 0:
            pos.append(row)
        elif aj < 0:
            neg.append(row)
        else:
            out.append(row)
    if not pos or not neg:
        return out
    for ap, cp, sp in pos:
        alpha = ap[j]
        for an, cn, sn in neg:
            gamma = -an[j]
            a = tuple(gamma * x + alpha * y for x, y in zip(ap, an))
            out.append((a, gamma * cp + alpha * cn, sp or sn))
    return out


def feasible(rows, nvars):
    """Exact feasibility of a mixed strict/non-strict rational system."""
    rows = reduce_rows(rows)
    if rows is None:
        return False
    while rows:
        best_j = -1
        best_cost = None
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
            if best_cost is None or cost < best_cost:
                best_j = j
                best_cost = cost
                if cost == 0:
                    break
        if best_j < 0:
            return True
        rows = reduce_rows(eliminate(rows, best_j))
        if rows is None:
            return False
    return True
