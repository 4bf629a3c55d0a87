"""Independent test oracles.

These deliberately avoid the library's decision paths: ampleness is checked
through the quadratic Nakai-style criterion instead of Mori generators,
polyhedron emptiness through dense grid search, and vertices through plain
subset enumeration.  Expected values frozen in the tests were computed with
these functions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm

import numpy as np

from ampleangles.polyhedra import LinearConstraint, RationalPolyhedron
from ampleangles.surfaces import (
    P2,
    CurveCatalog,
    DivisorClass,
    SurfaceModel,
    basis_class,
    intersect,
)


def nakai_ample(S: SurfaceModel, cat: CurveCatalog, D: DivisorClass) -> bool:
    """Ampleness via D.D > 0 plus strict positivity on every tracked curve.

    Sound and complete when the catalog contains all irreducible negative
    curves: positivity on the non-negative-square part of the Mori cone
    follows from D.D > 0 together with positivity against the base movable
    classes (which are honorary curves here).
    """
    if intersect(S, D, D) <= 0:
        return False
    for rec in cat.records:
        if intersect(S, D, rec.klass) <= 0:
            return False
    movables = ["H"] if S.base.kind == P2 else (
        ["Z", "F"] if S.base.n == 0 else ["F"]
    )
    for name in movables:
        if intersect(S, D, basis_class(S, name)) <= 0:
            return False
    return True


def int_rows(poly: RationalPolyhedron) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Constraints as integer arrays (A, c, strict) after clearing denominators."""
    A, cs, strict = [], [], []
    for con in poly.constraints:
        mult = lcm(*[q.denominator for q in con.a], con.c.denominator)
        A.append([int(q * mult) for q in con.a])
        cs.append(int(con.c * mult))
        strict.append(con.strict)
    return (
        np.array(A, dtype=np.int64),
        np.array(cs, dtype=np.int64),
        np.array(strict, dtype=bool),
    )


def grid_point_in(poly: RationalPolyhedron, denominator: int = 64):
    """Some denominator-`denominator` grid point of [0,1]^r inside poly, or None."""
    A, cs, strict = int_rows(poly)
    r = poly.r
    axis = np.arange(denominator + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * r), indexing="ij")
    points = np.stack([g.reshape(-1) for g in grids], axis=1)  # numerators
    values = points @ A.T + denominator * cs  # exact: small ints
    ok = np.where(strict, values > 0, values >= 0).all(axis=1)
    idx = np.flatnonzero(ok)
    if idx.size == 0:
        return None
    k = points[idx[0]]
    return tuple(Fraction(int(v), denominator) for v in k)


def ball_grid(r: int, denominator: int = 64) -> np.ndarray:
    """Positive grid numerators k in {1..d}^r with |k| < d (unit-ball grid)."""
    axis = np.arange(1, denominator + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * r), indexing="ij")
    points = np.stack([g.reshape(-1) for g in grids], axis=1)
    inside = (points * points).sum(axis=1) < denominator * denominator
    return points[inside]


def strongly_alf_sampling(body, epsilons=(2, 4, 8, 16, 32, 64), denominator=64) -> bool:
    """Sampling oracle for the strong condition.

    For each epsilon = 1/e the ball B_eps is probed on its own
    denominator-`denominator` grid (points eps * k / denominator), which
    keeps the angular resolution independent of the scale.  The body is
    declared strong when some epsilon shows no violation of
    B_eps-containment.
    """
    if body.is_empty():
        return False
    poly = body.body
    A, cs, strict = int_rows(poly)
    points = ball_grid(poly.r, denominator)
    for e in epsilons:
        # constraint value at g = k/denominator/e, rescaled by denominator*e
        values = points @ A.T + denominator * e * cs
        ok = np.where(strict, values > 0, values >= 0).all(axis=1)
        if ok.all():
            return True
    return False


def brute_force_vertices(poly: RationalPolyhedron):
    """Vertices of the closure by plain subset enumeration (small r only)."""
    closed = [
        LinearConstraint(con.a, con.c, False) for con in poly.constraints
    ]
    r = poly.r
    found = set()
    for subset in itertools.combinations(closed, r):
        point = _solve_square([list(con.a) + [-con.c] for con in subset], r)
        if point is None:
            continue
        if all(con.value(point) >= 0 for con in closed):
            found.add(point)
    return tuple(sorted(found))


def _solve_square(rows, r):
    rows = [[Fraction(v) for v in row] for row in rows]
    for col in range(r):
        pivot = None
        for i in range(col, r):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for i in range(r):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col] / rows[col][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return tuple(rows[i][r] / rows[i][i] for i in range(r))
