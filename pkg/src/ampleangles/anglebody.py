"""The body of ample angles of a log pair, as an exact rational polyhedron.

For a pair (X, D = D_1 + ... + D_r) the affine map

    Phi(b_1, ..., b_r) = -K_X - sum_i (1 - b_i) D_i

sends angle vectors to divisor classes; the body of ample angles is the
set of b in the half-open box (0, 1]^r where Phi(b) is ample.  With a
complete Mori generator list this is cut out by the strict inequalities
``Phi(b) . C > 0``, one per generator, inside the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import IncompleteMoriCone
from .polyhedra import LinearConstraint, RationalPolyhedron, box_constraints
from .positivity import mori_generators
from .surfaces import DivisorClass, canonical_class, intersect


@dataclass(frozen=True)
class AffineAngleMap:
    """Exact affine map from angle space to the Picard lattice.

    ``constant`` is -K_X - sum_i D_i and ``linear[i]`` is the class of
    D_i, so evaluation is ``constant + sum_i b_i * linear[i]``.
    """

    linear: tuple[DivisorClass, ...]
    constant: DivisorClass

    @property
    def r(self) -> int:
        return len(self.linear)

    def at(self, beta: Sequence) -> DivisorClass:
        if len(beta) != self.r:
            raise ValueError(f"expected {self.r} angles, got {len(beta)}")
        out = self.constant
        for q, d in zip(beta, self.linear):
            out = out + Fraction(q) * d
        return out

    def paired_constraint(self, surface, curve: DivisorClass) -> LinearConstraint:
        """The strict inequality ``Phi(b) . curve > 0`` as a constraint in b."""
        a = tuple(intersect(surface, d, curve) for d in self.linear)
        c = intersect(surface, self.constant, curve)
        return LinearConstraint(a, c, True)


@dataclass(frozen=True)
class Provenance:
    """Origin of one constraint of an ample-angle body."""

    kind: str  # "box-lower" | "box-upper" | "curve"
    axis: Optional[int] = None
    curve_id: Optional[str] = None
    curve_class: Optional[DivisorClass] = None


@dataclass(frozen=True)
class AmpleAngleBody:
    """A rational polyhedron in angle space with per-constraint provenance.

    The constraint list always contains the box 0 < b_i <= 1; curve-induced
    constraints carry the inducing class.  ``provenance`` is aligned with
    ``body.constraints``.
    """

    body: RationalPolyhedron
    provenance: tuple[Provenance, ...]

    def __post_init__(self):
        if len(self.provenance) != len(self.body.constraints):
            raise ValueError("provenance must align with the constraint list")

    @property
    def r(self) -> int:
        return self.body.r

    def is_empty(self) -> bool:
        return self.body.is_empty()

    def non_box_constraints(self) -> tuple[tuple[LinearConstraint, Provenance], ...]:
        return tuple(
            (con, prov)
            for con, prov in zip(self.body.constraints, self.provenance)
            if prov.kind == "curve"
        )


def ample_angle_map(pair) -> AffineAngleMap:
    """The map Phi of a log pair (requires r >= 1 boundary components)."""
    if pair.r < 1:
        raise ValueError("the pair has no boundary components")
    boundary = pair.boundary_classes()
    constant = canonical_class(pair.surface)
    for d in boundary:
        constant = constant - d
    return AffineAngleMap(tuple(boundary), constant)


def _boxed(r: int, extra: Sequence[LinearConstraint]) -> tuple[
    RationalPolyhedron, tuple[Provenance, ...]
]:
    cons = list(box_constraints(r))
    provs: list[Provenance] = []
    for i in range(r):
        provs.append(Provenance("box-lower", axis=i))
        provs.append(Provenance("box-upper", axis=i))
    return RationalPolyhedron(r, tuple(cons) + tuple(extra)), tuple(provs)


def compute_AA(pair) -> AmpleAngleBody:
    """The body of ample angles of a pair with certified Mori generators.

    Constraints are ``Phi(b) . C > 0`` per Mori generator plus the box;
    redundant curve constraints are removed (the box is always kept).
    Refuses to produce a possibly unsound polytope when the certificate is
    missing.
    """
    gens = mori_generators(pair.surface, pair.catalog)
    if not gens.complete:
        raise IncompleteMoriCone(
            "the Mori generator list is not certified complete for this "
            "surface; the ample-angle body cannot be computed soundly"
        )
    phi = ample_angle_map(pair)
    r = pair.r
    curve_cons: list[LinearConstraint] = []
    curve_provs: list[Provenance] = []
    seen: set[LinearConstraint] = set()
    for cid, g in zip(gens.ids, gens.classes):
        con = phi.paired_constraint(pair.surface, g).normalized()
        if con in seen:
            continue
        seen.add(con)
        curve_cons.append(con)
        curve_provs.append(Provenance("curve", curve_id=cid, curve_class=g))
    poly, box_provs = _boxed(r, curve_cons)
    provs = box_provs + tuple(curve_provs)
    if poly.is_empty():
        return AmpleAngleBody(poly, provs)
    protected = range(2 * r)
    keep = poly.irredundant(protected=protected)
    kept_cons = tuple(poly.constraints[i] for i in keep)
    kept_provs = tuple(provs[i] for i in keep)
    return AmpleAngleBody(RationalPolyhedron(r, kept_cons), kept_provs)


def body_from_constraints(
    r: int, constraints: Sequence[LinearConstraint]
) -> AmpleAngleBody:
    """Box plus arbitrary extra constraints, canonicalized like compute_AA."""
    extra = [con.normalized() for con in constraints]
    poly, box_provs = _boxed(r, extra)
    provs = box_provs + tuple(Provenance("curve") for _ in extra)
    if poly.is_empty():
        return AmpleAngleBody(poly, provs)
    keep = poly.irredundant(protected=range(2 * r))
    return AmpleAngleBody(
        RationalPolyhedron(r, tuple(poly.constraints[i] for i in keep)),
        tuple(provs[i] for i in keep),
    )


def is_strongly_ALF(body: AmpleAngleBody) -> bool:
    """Whether some ball around the origin meets the box inside the body.

    Decided constraint-wise on the irredundant list: a constraint
    ``a . b + c > 0`` admits every small angle vector exactly when c > 0,
    or c = 0 with a componentwise >= 0 and nonzero.  (For c > 0 the
    violating set sits at distance >= c/|a| from the origin; for c = 0 and
    mixed signs, points along a negative coordinate violate at every
    scale, so no ball works.)  An empty body is never strongly ALF.
    """
    if body.is_empty():
        return False
    for con, prov in zip(body.body.constraints, body.provenance):
        if prov.kind != "curve":
            continue  # box constraints pass: 0 < b_i has c=0, a >= 0
        if con.c > 0:
            continue
        if con.c == 0 and any(q > 0 for q in con.a) and all(q >= 0 for q in con.a):
            continue
        if con.c == 0 and not any(con.a) and not con.strict:
            continue  # trivial 0 >= 0
        return False
    return True
