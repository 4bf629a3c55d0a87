"""Log pairs, the rank-two families, structure blow-ups and classification.

The four families live on Hirzebruch surfaces:

    ALdP1: C1 = Z, C2 in |Z+(n+2)F|
    ALdP2: C1 = Z, C2 in |Z+(n+1)F|, C3 in |F|
    ALdP3: C1 = Z, C2, C3 in |F|
    ALdP4: C1 = Z, C2, C3 in |F|, C4 in |Z+nF|

``classify`` computes the body of ample angles and grades the pair as
NotALF (empty body), ALF, or StronglyALF.  The two structure operations
blow up boundary points: type (i) keeps the proper transforms as the
boundary, type (ii) (at a node) adjoins the exceptional curve.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .anglebody import AmpleAngleBody, ample_angle_map, compute_AA, is_strongly_ALF
from .errors import IncompleteMoriCone, SncViolation, UnknownCurve
from .polyhedra import LinearConstraint, RationalPolyhedron, box_constraints
from .surfaces import (
    Base,
    BlowUpSpec,
    CurveCatalog,
    CurveRecord,
    DivisorClass,
    HIRZEBRUCH,
    SurfaceModel,
    base_catalog,
    blow_up,
    canonical_class,
    class_from_coeffs,
    format_class,
    intersect,
)

FAMILY_KINDS = ("ALdP1", "ALdP2", "ALdP3", "ALdP4")


class PairStatus(enum.Enum):
    NOT_ALF = "NotALF"
    ALF = "ALF"
    STRONGLY_ALF = "StronglyALF"


class BoundaryShape(enum.Enum):
    CHAIN = "Chain"
    CYCLE = "Cycle"
    OTHER = "Other"


@dataclass(frozen=True)
class LogPair:
    """A surface, its curve catalog, and an ordered boundary D_1, ..., D_r."""

    surface: SurfaceModel
    catalog: CurveCatalog
    boundary: tuple[str, ...]

    @classmethod
    def create(
        cls, surface: SurfaceModel, catalog: CurveCatalog, boundary: tuple[str, ...]
    ) -> "LogPair":
        if len(set(boundary)) != len(boundary):
            raise SncViolation("boundary components must be distinct")
        catalog = catalog.with_boundary_flags(boundary)
        pair = cls(surface, catalog, tuple(boundary))
        for i, a in enumerate(pair.boundary_records()):
            for b in pair.boundary_records()[i + 1 :]:
                meet = intersect(surface, a.klass, b.klass)
                if meet < 0 or meet.denominator != 1:
                    raise SncViolation(
                        f"boundary curves {a.id!r} and {b.id!r} meet in "
                        f"{meet} points; need a non-negative integer"
                    )
        return pair

    @property
    def r(self) -> int:
        return len(self.boundary)

    def boundary_records(self) -> tuple[CurveRecord, ...]:
        return tuple(self.catalog.get(cid) for cid in self.boundary)

    def boundary_classes(self) -> tuple[DivisorClass, ...]:
        return tuple(rec.klass for rec in self.boundary_records())


@dataclass(frozen=True)
class Verdict:
    status: PairStatus
    body: AmpleAngleBody
    diagnostics: tuple[str, ...] = ()


@dataclass(frozen=True)
class DualGraph:
    """Boundary components as nodes; C_i . C_j parallel edges for i != j."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]  # (id_i, id_j, multiplicity), i < j


@dataclass(frozen=True)
class ShapeResult:
    shape: BoundaryShape
    anticanonical: Optional[bool]  # set for cycles: whether sum D_i = -K


# --------------------------------------------------------------------------
# Families
# --------------------------------------------------------------------------


def family(kind: str, n: int) -> LogPair:
    """One of the four rank-two families on the Hirzebruch surface F_n."""
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")
    if n < 0:
        raise ValueError("the Hirzebruch index n must be >= 0")
    S = SurfaceModel(Base(HIRZEBRUCH, n))
    z = (1, 0)
    f = (0, 1)
    if kind == "ALdP1":
        curves = [("C1", z), ("C2", (1, n + 2))]
    elif kind == "ALdP2":
        curves = [("C1", z), ("C2", (1, n + 1)), ("C3", f)]
    elif kind == "ALdP3":
        curves = [("C1", z), ("C2", f), ("C3", f)]
    else:
        curves = [("C1", z), ("C2", f), ("C3", f), ("C4", (1, n))]
    declared = [(cid, class_from_coeffs(vec)) for cid, vec in curves]
    cat = base_catalog(S, declared)
    return LogPair.create(S, cat, tuple(cid for cid, _ in curves))


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------


def classify(pair: LogPair) -> Verdict:
    """Grade a pair by its body of ample angles.

    Raises :class:`IncompleteMoriCone` when the surface's Mori generators
    are not certified complete (no unsound verdicts).
    """
    if pair.r < 1:
        raise ValueError("classification needs at least one boundary component")
    body = compute_AA(pair)
    diagnostics: list[str] = []
    if body.is_empty():
        for con, prov in body.non_box_constraints():
            if not any(con.a) and con.c <= 0:
                name = prov.curve_id or format_class(pair.surface, prov.curve_class)
                diagnostics.append(
                    f"curve {name} of class "
                    f"{format_class(pair.surface, prov.curve_class)} pairs to "
                    f"{con.c} with every angle vector; the strict constraint "
                    "cannot hold"
                )
        if not diagnostics:
            diagnostics.append(
                "the ample-angle constraints are jointly infeasible inside the box"
            )
        return Verdict(PairStatus.NOT_ALF, body, tuple(diagnostics))
    if is_strongly_ALF(body):
        return Verdict(PairStatus.STRONGLY_ALF, body, ())
    witness = body.body.sample_point()
    diagnostics.append(
        "ample angles exist but some constraint excludes a neighbourhood of 0"
        f"; witness angle vector {tuple(str(q) for q in witness)}"
    )
    return Verdict(PairStatus.ALF, body, tuple(diagnostics))


# --------------------------------------------------------------------------
# Boundary combinatorics
# --------------------------------------------------------------------------


def dual_graph(pair: LogPair) -> DualGraph:
    recs = pair.boundary_records()
    edges = []
    for i in range(len(recs)):
        for j in range(i + 1, len(recs)):
            mult = intersect(pair.surface, recs[i].klass, recs[j].klass)
            if mult > 0:
                edges.append((recs[i].id, recs[j].id, int(mult)))
    return DualGraph(tuple(rec.id for rec in recs), tuple(edges))


def boundary_shape(pair: LogPair) -> ShapeResult:
    """Chain / Cycle / Other; cycles also report whether sum D_i = -K."""
    graph = dual_graph(pair)
    n = len(graph.nodes)
    degree = {v: 0 for v in graph.nodes}
    adjacency = {v: set() for v in graph.nodes}
    multi = False
    for u, v, mult in graph.edges:
        degree[u] += mult
        degree[v] += mult
        adjacency[u].add(v)
        adjacency[v].add(u)
        if mult > 1:
            multi = True

    def connected() -> bool:
        if n == 0:
            return True
        seen = {graph.nodes[0]}
        stack = [graph.nodes[0]]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    shape = BoundaryShape.OTHER
    total = sum(mult for _, _, mult in graph.edges)
    if n == 1:
        shape = BoundaryShape.CHAIN
    elif connected():
        degrees = sorted(degree.values())
        if not multi and total == n - 1 and degrees[:2] == [1, 1] and all(
            d <= 2 for d in degrees
        ):
            shape = BoundaryShape.CHAIN
        elif total == n and all(d == 2 for d in degrees):
            # a double edge on two nodes counts as a 2-cycle
            shape = BoundaryShape.CYCLE
    if shape is not BoundaryShape.CYCLE:
        return ShapeResult(shape, None)
    total_class = pair.boundary_classes()[0]
    for d in pair.boundary_classes()[1:]:
        total_class = total_class + d
    return ShapeResult(
        BoundaryShape.CYCLE, total_class == canonical_class(pair.surface)
    )


def is_minimal(pair: LogPair) -> tuple[bool, Optional[CurveRecord]]:
    """No tracked off-boundary (-1)-curve meets the boundary exactly once."""
    boundary = set(pair.boundary)
    total = None
    for d in pair.boundary_classes():
        total = d if total is None else total + d
    for rec in pair.catalog.records:
        if rec.id in boundary or rec.self_int != -1:
            continue
        if total is not None and intersect(pair.surface, rec.klass, total) == 1:
            return False, rec
    return True, None


def minus_one_incidence_check(pair: LogPair) -> tuple[CurveRecord, ...]:
    """Off-boundary (-1)-curves must meet the boundary in 0 or 1 points."""
    boundary = set(pair.boundary)
    total = None
    for d in pair.boundary_classes():
        total = d if total is None else total + d
    violations = []
    for rec in pair.catalog.records:
        if rec.id in boundary or rec.self_int != -1:
            continue
        meet = intersect(pair.surface, rec.klass, total) if total is not None else 0
        if meet not in (0, 1):
            violations.append(rec)
    return tuple(violations)


# --------------------------------------------------------------------------
# Structure-theorem blow-ups
# --------------------------------------------------------------------------


def blow_up_type_i(pair: LogPair, spec: BlowUpSpec) -> LogPair:
    """Blow up a smooth boundary point; the boundary keeps its r components."""
    if spec.node:
        raise SncViolation("type (i) blow-ups happen away from boundary nodes")
    boundary = set(pair.boundary)
    on_boundary = [cid for cid in spec.on if cid in boundary]
    if len(on_boundary) != 1:
        raise SncViolation(
            "a type (i) blow-up sits on exactly one boundary curve "
            f"(got {len(on_boundary)})"
        )
    S2, cat2 = blow_up(pair.surface, pair.catalog, spec)
    return LogPair.create(S2, cat2, pair.boundary)


def blow_up_type_ii(pair: LogPair, spec: BlowUpSpec) -> LogPair:
    """Blow up a boundary node; the exceptional curve joins the boundary."""
    boundary = set(pair.boundary)
    if not spec.node or len(spec.on) != 2 or any(c not in boundary for c in spec.on):
        raise SncViolation(
            "a type (ii) blow-up needs a node: two boundary curves through "
            "the point and the node flag set"
        )
    S2, cat2 = blow_up(pair.surface, pair.catalog, spec)
    e_id = f"E{len(S2.blowups)}"
    return LogPair.create(S2, cat2, pair.boundary + (e_id,))


def boundary_nodes(pair: LogPair) -> tuple[tuple[str, str], ...]:
    """Pairs of boundary curves with positive intersection, in order."""
    recs = pair.boundary_records()
    nodes = []
    for i in range(len(recs)):
        for j in range(i + 1, len(recs)):
            if intersect(pair.surface, recs[i].klass, recs[j].klass) > 0:
                nodes.append((recs[i].id, recs[j].id))
    return tuple(nodes)


def obstruction_same_fiber(n: int) -> LogPair:
    """Two smooth-locus blow-ups of ALdP.4.n sharing one fiber.

    Blows up a point of C1 and a point of C4 on the same member f of |F|
    (p1, p2 away from C2 and C3).  The transform of f becomes a tracked
    (-2)-curve on which the angle map pairs to zero identically, so the
    resulting pair has an empty body of ample angles.
    """
    if n < 1:
        raise ValueError("the same-fiber obstruction needs n >= 1")
    pair = family("ALdP4", n)
    pair = blow_up_type_i(pair, BlowUpSpec(on=("C1",), fiber_label="f"))
    pair = blow_up_type_i(pair, BlowUpSpec(on=("C4",), fiber_label="f"))
    return pair


# --------------------------------------------------------------------------
# Verification battery
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyRow:
    case: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    rows: tuple[VerifyRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)


def closed_form_body(kind: str, n: int) -> RationalPolyhedron:
    """The documented closed form of a family's angle body (box included)."""
    if kind == "ALdP1":
        r, a = 2, (-n, 2)
    elif kind in ("ALdP2", "ALdP3"):
        r, a = 3, (-n, 1, 1)
    elif kind == "ALdP4":
        r, a = 4, (-n, 1, 1, 0)
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    extra = LinearConstraint(tuple(Fraction(v) for v in a), Fraction(0), True)
    return RationalPolyhedron(r, box_constraints(r) + (extra,))


def verify_theorems(n_max: int) -> VerifyReport:
    """Check the classification battery for all families with n <= n_max.

    Per family and n: the computed body equals the closed form (exact set
    equality) and the status is StronglyALF for n = 0, ALF otherwise.  Per
    n >= 1: the node blow-up of ALdP.1.n is ALF but not strongly, and the
    same-fiber obstruction pair is NotALF with a (-2) fiber transform.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows: list[VerifyRow] = []

    def check(case: str, ok: bool, detail: str = ""):
        rows.append(VerifyRow(case, bool(ok), detail))

    for kind in FAMILY_KINDS:
        for n in range(n_max + 1):
            pair = family(kind, n)
            verdict = classify(pair)
            expected = closed_form_body(kind, n)
            same = verdict.body.body.equals(expected)
            check(
                f"{kind} n={n} body",
                same,
                "computed body matches the closed form"
                if same
                else "computed body differs from the closed form",
            )
            want = PairStatus.STRONGLY_ALF if n == 0 else PairStatus.ALF
            check(
                f"{kind} n={n} status",
                verdict.status is want,
                f"status {verdict.status.value}, expected {want.value}",
            )

    for n in range(1, n_max + 1):
        node_pair = blow_up_type_ii(
            family("ALdP1", n), BlowUpSpec(on=("C1", "C2"), node=True)
        )
        verdict = classify(node_pair)
        check(
            f"ALdP1 n={n} node blow-up",
            verdict.status is PairStatus.ALF,
            f"status {verdict.status.value}, expected ALF (not strongly)",
        )

    for n in range(1, n_max + 1):
        pair = obstruction_same_fiber(n)
        fib = pair.catalog.get("f")
        phi = ample_angle_map(pair)
        pairs_to_zero = all(
            intersect(pair.surface, d, fib.klass) == 0 for d in phi.linear
        ) and intersect(pair.surface, phi.constant, fib.klass) == 0
        verdict = classify(pair)
        ok = (
            fib.self_int == -2
            and pairs_to_zero
            and verdict.status is PairStatus.NOT_ALF
        )
        check(
            f"ALdP4 n={n} same-fiber obstruction",
            ok,
            f"fiber transform self-intersection {fib.self_int}, "
            f"status {verdict.status.value}",
        )

    return VerifyReport(n_max, tuple(rows))
