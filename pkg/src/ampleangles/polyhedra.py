"""Exact rational polyhedra given by strict and non-strict linear constraints.

A constraint means ``a . x + c > 0`` (strict) or ``a . x + c >= 0``.
Emptiness, set equality, redundancy removal and witness extraction all run
on exact integer Fourier-Motzkin elimination (see :mod:`ampleangles.fme`);
vertex enumeration of bounded closures uses exact Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from . import fme
from .errors import DimensionMismatch, UnboundedPolyhedron


@dataclass(frozen=True)
class LinearConstraint:
    """``a . x + c > 0`` when strict, else ``a . x + c >= 0``."""

    a: tuple[Fraction, ...]
    c: Fraction
    strict: bool

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(v) for v in self.a))
        object.__setattr__(self, "c", Fraction(self.c))

    def value(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.a):
            raise DimensionMismatch("point dimension does not match constraint")
        return sum((q * Fraction(p) for q, p in zip(self.a, point)), self.c)

    def satisfied(self, point: Sequence[Fraction]) -> bool:
        v = self.value(point)
        return v > 0 if self.strict else v >= 0

    def negation(self) -> "LinearConstraint":
        """The complementary half-space (strictness flips)."""
        return LinearConstraint(
            tuple(-q for q in self.a), -self.c, not self.strict
        )

    def normalized(self) -> "LinearConstraint":
        """Primitive-integer form; the defining set is unchanged."""
        a, c, strict = _int_row(self)
        a, c, strict = fme.normalize(a, c, strict)
        return LinearConstraint(tuple(Fraction(v) for v in a), Fraction(c), strict)

    def is_trivial(self) -> bool:
        """True for constant rows satisfied everywhere (e.g. ``0 >= 0``)."""
        if any(self.a):
            return False
        return self.c > 0 or (self.c == 0 and not self.strict)


def _int_row(con: LinearConstraint) -> tuple[tuple[int, ...], int, bool]:
    mult = lcm(*[q.denominator for q in con.a], con.c.denominator)
    return (
        tuple(int(q * mult) for q in con.a),
        int(con.c * mult),
        con.strict,
    )


def _int_rows(constraints: Iterable[LinearConstraint]):
    return [_int_row(con) for con in constraints]


@dataclass(frozen=True)
class RationalPolyhedron:
    """Finitely many rational linear constraints in dimension ``r``."""

    r: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for con in self.constraints:
            if len(con.a) != self.r:
                raise DimensionMismatch(
                    f"constraint of length {len(con.a)} in dimension {self.r}"
                )

    # -- membership ---------------------------------------------------

    def contains(self, point: Sequence) -> bool:
        pt = [Fraction(p) for p in point]
        if len(pt) != self.r:
            raise DimensionMismatch("point dimension does not match polyhedron")
        return all(con.satisfied(pt) for con in self.constraints)

    # -- emptiness and inclusion ---------------------------------------

    def is_empty(self) -> bool:
        """Exact emptiness via Fourier-Motzkin, honoring strictness."""
        return not fme.feasible(_int_rows(self.constraints), self.r)

    def implies(self, con: LinearConstraint) -> bool:
        """Whether every point of the polyhedron satisfies ``con``."""
        if len(con.a) != self.r:
            raise DimensionMismatch("constraint dimension mismatch")
        rows = _int_rows(self.constraints)
        rows.append(_int_row(con.negation()))
        return not fme.feasible(rows, self.r)

    def subset_of(self, other: "RationalPolyhedron") -> bool:
        if self.r != other.r:
            raise DimensionMismatch("polyhedra of different dimension")
        return all(self.implies(con) for con in other.constraints)

    def equals(self, other: "RationalPolyhedron") -> bool:
        """Set equality by mutual constraint implication."""
        return self.subset_of(other) and other.subset_of(self)

    # -- canonical forms -----------------------------------------------

    def closure(self) -> "RationalPolyhedron":
        """Topological closure: relax strict constraints, empty stays empty."""
        if self.is_empty():
            return _empty(self.r)
        relaxed = tuple(
            LinearConstraint(con.a, con.c, False) for con in self.constraints
        )
        return RationalPolyhedron(self.r, relaxed)

    def irredundant(self, protected: Sequence[int] = ()) -> tuple[int, ...]:
        """Indices of a deterministic irredundant constraint subset.

        Indices in ``protected`` are always kept.  The remaining
        constraints are dropped, in index order, whenever the others imply
        them.  Callers should not run this on an empty polyhedron.
        """
        keep = list(range(len(self.constraints)))
        protected_set = set(protected)
        i = 0
        while i < len(keep):
            idx = keep[i]
            if idx in protected_set:
                i += 1
                continue
            con = self.constraints[idx]
            if con.is_trivial():
                keep.pop(i)
                continue
            rest = [self.constraints[j] for j in keep if j != idx]
            if RationalPolyhedron(self.r, tuple(rest)).implies(con):
                keep.pop(i)
            else:
                i += 1
        return tuple(keep)

    # -- witnesses ------------------------------------------------------

    def sample_point(self) -> Optional[tuple[Fraction, ...]]:
        """Some rational point satisfying all constraints, or ``None``.

        Variables are projected away from the last to the first; values are
        then chosen level by level, taking midpoints of the admissible
        interval (or an offset of 1 when one side is unbounded).
        """
        levels = [None] * (self.r + 1)
        rows = fme.reduce_rows(_int_rows(self.constraints))
        if rows is None:
            return None
        levels[self.r] = rows
        for k in range(self.r, 0, -1):
            rows = fme.reduce_rows(fme.eliminate(rows, k - 1))
            if rows is None:
                return None
            levels[k - 1] = rows
        point: list[Fraction] = []
        for k in range(self.r):
            point.append(_choose_value(levels[k + 1], point, k))
        return tuple(point)

    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """Vertices of the closure, deduplicated and in lexicographic order.

        The closure must be bounded (it always is inside the angle box).
        """
        closed = self.closure()
        if closed.is_empty():
            return ()
        if _has_recession_direction(closed):
            raise UnboundedPolyhedron("vertex enumeration needs a bounded closure")
        normals = [(con.a, con.c) for con in closed.constraints]
        found: set[tuple[Fraction, ...]] = set()
        _vertex_search(closed, normals, 0, [], found)
        return tuple(sorted(found))


def _empty(r: int) -> RationalPolyhedron:
    never = LinearConstraint((Fraction(0),) * r, Fraction(-1), False)
    return RationalPolyhedron(r, (never,))


def _choose_value(rows, fixed: list[Fraction], k: int) -> Fraction:
    """Pick a value for variable k given values of variables 0..k-1."""
    lower = None  # (bound, strict)
    upper = None
    for a, c, strict in rows:
        ak = a[k]
        if ak == 0:
            continue
        rest = Fraction(c) + sum(Fraction(a[i]) * fixed[i] for i in range(k))
        bound = -rest / ak
        if ak > 0:  # x_k >(=) bound
            if lower is None or bound > lower[0] or (bound == lower[0] and strict):
                lower = (bound, strict)
        else:  # x_k <(=) bound
            if upper is None or bound < upper[0] or (bound == upper[0] and strict):
                upper = (bound, strict)
    if lower is None and upper is None:
        return Fraction(0)
    if lower is None:
        return upper[0] - 1
    if upper is None:
        return lower[0] + 1
    lo, lo_strict = lower
    hi, hi_strict = upper
    if lo == hi:
        if lo_strict or hi_strict:
            raise AssertionError("projection admitted an empty interval")
        return lo
    if lo > hi:
        raise AssertionError("projection admitted an empty interval")
    return (lo + hi) / 2


def _has_recession_direction(closed: RationalPolyhedron) -> bool:
    """Whether the recession cone contains a nonzero rational direction."""
    r = closed.r
    cone_rows = [
        (_int_row(con)[0], 0, False) for con in closed.constraints if any(con.a)
    ]
    for i in range(r):
        for sign in (1, -1):
            unit = tuple(sign if j == i else 0 for j in range(r))
            rows = cone_rows + [(unit, -1, False)]
            if fme.feasible(rows, r):
                return True
    return False


def _vertex_search(closed, normals, start, echelon, found):
    """Depth-first search over linearly independent constraint subsets.

    ``echelon`` holds augmented rows (a | rhs) in row-echelon form; each
    accepted constraint increases the rank, so full depth pins a unique
    candidate point which is kept when it satisfies all constraints.
    """
    r = closed.r
    if len(echelon) == r:
        point = _solve_echelon(echelon, r)
        if all(con.value(point) >= 0 for con in closed.constraints):
            found.add(point)
        return
    if r - len(echelon) > len(normals) - start:
        return
    for i in range(start, len(normals)):
        a, c = normals[i]
        row = list(a) + [-c]
        reduced = _reduce_against(row, echelon, r)
        if reduced is not None:
            _vertex_search(closed, normals, i + 1, echelon + [reduced], found)


def _reduce_against(row, echelon, r):
    row = row[:]
    for pivot_col, prow in echelon:
        if row[pivot_col] != 0:
            factor = row[pivot_col] / prow[pivot_col]
            for j in range(r + 1):
                row[j] -= factor * prow[j]
    for col in range(r):
        if row[col] != 0:
            return (col, row)
    return None  # dependent (or inconsistent): cannot raise the rank


def _solve_echelon(echelon, r):
    rows = sorted(echelon, key=lambda e: e[0])
    values = [Fraction(0)] * r
    for pivot_col, row in reversed(rows):
        acc = row[r] - sum(row[j] * values[j] for j in range(pivot_col + 1, r))
        values[pivot_col] = acc / row[pivot_col]
    return tuple(values)


def box_constraints(r: int) -> tuple[LinearConstraint, ...]:
    """The half-open angle box ``0 < x_i <= 1`` as 2r constraints."""
    cons = []
    for i in range(r):
        unit = tuple(Fraction(1 if j == i else 0) for j in range(r))
        cons.append(LinearConstraint(unit, Fraction(0), True))
        cons.append(
            LinearConstraint(tuple(-v for v in unit), Fraction(1), False)
        )
    return tuple(cons)
