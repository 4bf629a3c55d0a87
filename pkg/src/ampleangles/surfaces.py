"""Picard lattices of rational surfaces built from P^2 and Hirzebruch surfaces.

A surface is described combinatorially: a base (the projective plane or a
Hirzebruch surface F_n) plus an ordered list of point blow-ups.  Points are
never given by coordinates; a blow-up specification records only which
tracked curves pass through the point and, on Hirzebruch-derived surfaces,
which member of the ruling contains it.  All intersection numbers are exact
rationals computed against the Gram matrix of the Picard basis.

Every value here is immutable; the blow-up operation returns fresh objects.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .errors import DimensionMismatch, SncViolation, UnknownCurve

P2 = "p2"
HIRZEBRUCH = "hirzebruch"

_AUTO_SECTION_ID = "Z"


@dataclass(frozen=True)
class Base:
    """Base surface: ``kind`` is ``"p2"`` or ``"hirzebruch"`` (with index n)."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in (P2, HIRZEBRUCH):
            raise ValueError(f"unknown base kind {self.kind!r}")
        if self.kind == P2 and self.n != 0:
            raise ValueError("p2 takes no Hirzebruch index")
        if self.n < 0:
            raise ValueError("Hirzebruch index must be >= 0")

    @property
    def rank(self) -> int:
        return 1 if self.kind == P2 else 2

    @property
    def basis_names(self) -> tuple[str, ...]:
        return ("H",) if self.kind == P2 else ("Z", "F")


@dataclass(frozen=True)
class BlowUpSpec:
    """One point blow-up.

    ``on`` lists the tracked curves through the point (at most two, by
    simple normal crossings).  ``fiber_label`` names the member of the
    ruling |F| containing the point; equal labels mean the same fiber.
    ``node`` must be set exactly when the point is an intersection of two
    boundary curves.
    """

    on: tuple[str, ...] = ()
    fiber_label: Optional[str] = None
    node: bool = False

    def __post_init__(self):
        object.__setattr__(self, "on", tuple(dict.fromkeys(self.on)))
        if len(self.on) > 2:
            raise SncViolation("a blown point may lie on at most two tracked curves")


@dataclass(frozen=True)
class SurfaceModel:
    """A base surface together with an ordered list of blow-ups."""

    base: Base
    blowups: tuple[BlowUpSpec, ...] = ()

    @property
    def rank(self) -> int:
        return self.base.rank + len(self.blowups)

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.base.basis_names + tuple(
            f"E{k + 1}" for k in range(len(self.blowups))
        )

    @property
    def is_hirzebruch(self) -> bool:
        return self.base.kind == HIRZEBRUCH


@dataclass(frozen=True)
class DivisorClass:
    """Exact rational coefficient vector over a surface's Picard basis."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(v) for v in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_dim(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_dim(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar) -> "DivisorClass":
        q = Fraction(scalar)
        return DivisorClass(tuple(q * a for a in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def _check_dim(self, other: "DivisorClass"):
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch(
                f"classes of length {len(self.coeffs)} and {len(other.coeffs)}"
            )


def class_from_coeffs(values: Iterable) -> DivisorClass:
    return DivisorClass(tuple(Fraction(v) for v in values))


def basis_class(S: SurfaceModel, name: str) -> DivisorClass:
    """The basis generator ``name`` ("H", "Z", "F", "E1", ...) as a class on S."""
    names = S.basis_names
    if name not in names:
        raise UnknownCurve(f"no basis element {name!r} on this surface")
    return DivisorClass(
        tuple(Fraction(1 if nm == name else 0) for nm in names)
    )


def format_class(S: SurfaceModel, D: DivisorClass) -> str:
    """Human-readable form like ``Z+4F-E1`` for reports and diagnostics."""
    parts = []
    for name, q in zip(S.basis_names, D.coeffs):
        if q == 0:
            continue
        if q == 1:
            term = name
        elif q == -1:
            term = f"-{name}"
        else:
            term = f"{q}{name}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def gram_matrix(S: SurfaceModel) -> tuple[tuple[Fraction, ...], ...]:
    """Intersection form on the Picard basis of S.

    P^2: H.H = 1.  F_n: Z.Z = -n, Z.F = 1, F.F = 0.  Each exceptional
    class E_k has E_k.E_k = -1 and is orthogonal to everything else.
    """
    r = S.rank
    rows = [[Fraction(0)] * r for _ in range(r)]
    if S.base.kind == P2:
        rows[0][0] = Fraction(1)
    else:
        rows[0][0] = Fraction(-S.base.n)
        rows[0][1] = rows[1][0] = Fraction(1)
    for k in range(S.base.rank, r):
        rows[k][k] = Fraction(-1)
    return tuple(tuple(row) for row in rows)


def intersect(S: SurfaceModel, D1: DivisorClass, D2: DivisorClass) -> Fraction:
    """Symmetric bilinear pairing of two classes on S."""
    r = S.rank
    if len(D1) != r or len(D2) != r:
        raise DimensionMismatch(
            f"expected classes of length {r}, got {len(D1)} and {len(D2)}"
        )
    gram = gram_matrix(S)
    total = Fraction(0)
    for i, a in enumerate(D1.coeffs):
        if a == 0:
            continue
        row = gram[i]
        total += a * sum(row[j] * b for j, b in enumerate(D2.coeffs) if b != 0)
    return total


def canonical_class(S: SurfaceModel) -> DivisorClass:
    """The anticanonical class -K of S.

    3H on P^2 and 2Z+(n+2)F on F_n; each blow-up subtracts the new
    exceptional class.
    """
    if S.base.kind == P2:
        head = [Fraction(3)]
    else:
        head = [Fraction(2), Fraction(S.base.n + 2)]
    return DivisorClass(tuple(head) + (Fraction(-1),) * len(S.blowups))


def pullback(S_child: SurfaceModel, D: DivisorClass) -> DivisorClass:
    """Pull a class back along the last blow-up (new E-coefficient zero)."""
    if not S_child.blowups:
        raise ValueError("surface has no blow-up to pull back along")
    if len(D) != S_child.rank - 1:
        raise DimensionMismatch("class does not live on the parent surface")
    return DivisorClass(D.coeffs + (Fraction(0),))


# --------------------------------------------------------------------------
# Curve catalogs
# --------------------------------------------------------------------------

PROV_SECTION = "section"
PROV_DECLARED = "declared"
PROV_EXCEPTIONAL = "exceptional"
PROV_FIBER = "fiber-instance"
PROV_COFIBER = "cofiber-instance"
PROV_TRANSFORM = "proper-transform"


@dataclass(frozen=True)
class Provenance:
    """Where a curve record came from.

    ``kind`` is one of the PROV_* tags; proper transforms keep the original
    id in ``of`` and retain a fiber instance's ``label``.
    """

    kind: str
    of: Optional[str] = None
    label: Optional[str] = None


@dataclass(frozen=True)
class CurveRecord:
    """A tracked irreducible curve with its class and cached self-intersection."""

    id: str
    klass: DivisorClass
    self_int: Fraction
    provenance: Provenance
    in_boundary: bool = False


@dataclass(frozen=True)
class CurveCatalog:
    """Tracked curves on a surface plus the Mori-completeness certificate.

    ``mori_complete`` asserts that the recorded negative curves together
    with the base generators generate the Mori cone; it is granted only for
    the configurations listed in :func:`blow_up` and cleared otherwise.
    ``declared`` remembers which records were introduced at base level (for
    serialization round-trips).
    """

    records: tuple[CurveRecord, ...]
    mori_complete: bool
    declared: tuple[str, ...] = ()

    def __post_init__(self):
        ids = [rec.id for rec in self.records]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate curve ids in catalog")

    def get(self, curve_id: str) -> CurveRecord:
        for rec in self.records:
            if rec.id == curve_id:
                return rec
        raise UnknownCurve(f"no curve {curve_id!r} in catalog")

    def has(self, curve_id: str) -> bool:
        return any(rec.id == curve_id for rec in self.records)

    def fiber_record(self, label: str) -> Optional[CurveRecord]:
        for rec in self.records:
            if rec.provenance.label == label:
                return rec
        return None

    def with_boundary_flags(self, boundary_ids: Iterable[str]) -> "CurveCatalog":
        wanted = set(boundary_ids)
        missing = wanted - {rec.id for rec in self.records}
        if missing:
            raise UnknownCurve(f"boundary ids not in catalog: {sorted(missing)}")
        recs = tuple(
            replace(rec, in_boundary=rec.id in wanted) for rec in self.records
        )
        return replace(self, records=recs)


def _self_int(S: SurfaceModel, D: DivisorClass) -> Fraction:
    return intersect(S, D, D)


def _id_ok(curve_id: str) -> bool:
    if not curve_id or curve_id.startswith("~"):
        return False
    if curve_id[0] == "E" and curve_id[1:].isdigit():
        return False
    return True


def base_catalog(
    S: SurfaceModel, declared: Iterable[tuple[str, DivisorClass]] = ()
) -> CurveCatalog:
    """Catalog for a base surface from the declared curves.

    On F_n with n >= 1 the negative section is unique: a declared curve of
    class Z names it, otherwise a record with id ``Z`` is added.  Declared
    classes are lightly validated against having irreducible members.
    """
    if S.blowups:
        raise ValueError("base_catalog expects an unblown surface")
    records: list[CurveRecord] = []
    declared_ids: list[str] = []
    section_seen = None
    for curve_id, klass in declared:
        if not _id_ok(curve_id):
            raise ValueError(
                f"curve id {curve_id!r} is reserved (E<k> and ~-prefixed ids are internal)"
            )
        if len(klass) != S.rank:
            raise DimensionMismatch(
                f"class for {curve_id!r} has length {len(klass)}, surface rank is {S.rank}"
            )
        _validate_irreducible_class(S, curve_id, klass)
        kind = PROV_DECLARED
        if S.is_hirzebruch and S.base.n >= 1 and klass == basis_class(S, "Z"):
            if section_seen is not None:
                raise SncViolation(
                    f"curves {section_seen!r} and {curve_id!r} both claim the unique "
                    f"negative section of F_{S.base.n}"
                )
            section_seen = curve_id
            kind = PROV_SECTION
        records.append(
            CurveRecord(curve_id, klass, _self_int(S, klass), Provenance(kind))
        )
        declared_ids.append(curve_id)
    if S.is_hirzebruch and S.base.n >= 1 and section_seen is None:
        z = basis_class(S, "Z")
        records.append(
            CurveRecord(_AUTO_SECTION_ID, z, _self_int(S, z), Provenance(PROV_SECTION))
        )
    return CurveCatalog(tuple(records), mori_complete=True, declared=tuple(declared_ids))


def _validate_irreducible_class(S: SurfaceModel, curve_id: str, klass: DivisorClass):
    """Reject classes that cannot carry an irreducible curve on the base."""
    if any(q.denominator != 1 for q in klass.coeffs):
        raise ValueError(f"curve {curve_id!r}: class must be integral")
    if S.base.kind == P2:
        d = klass.coeffs[0]
        if d < 1:
            raise ValueError(f"curve {curve_id!r}: degree on P^2 must be >= 1")
        return
    a, b = klass.coeffs
    n = S.base.n
    if n >= 1:
        if klass == basis_class(S, "Z"):
            return
        if (a, b) == (0, 1):
            return
        if a >= 1 and b >= n * a:
            return
    else:
        if (a >= 1 and b >= 1) or (a, b) in ((1, 0), (0, 1)):
            return
    raise ValueError(
        f"curve {curve_id!r}: class {format_class(S, klass)} has no irreducible members"
    )


def _is_vertical(S: SurfaceModel, klass: DivisorClass, ruling: str) -> bool:
    return intersect(S, klass, basis_class(S, ruling)) == 0


def blow_up(
    S: SurfaceModel, cat: CurveCatalog, spec: BlowUpSpec
) -> tuple[SurfaceModel, CurveCatalog]:
    """Blow up one combinatorially specified point.

    The rank grows by one; curves through the point are replaced by their
    proper transforms (class minus the new exceptional class).  On
    Hirzebruch-derived surfaces the member of |F| through the point is
    always materialized as a catalog record -- via ``fiber_label`` when
    given, or a fresh auto-labelled instance when no tracked vertical curve
    passes through the point (on F_0-derived surfaces the second ruling |Z|
    is materialized the same way).  This keeps every curve that turns
    negative under the blow-up inside the catalog.

    Mori completeness is preserved exactly when the point lies on a tracked
    curve or carries a fiber label, and is either pinned (two tracked
    incidences, counting a pre-existing labelled fiber) or is the very
    first blow-up.  Blow-ups of P^2-derived surfaces always clear the flag.
    """
    on_records = [cat.get(cid) for cid in spec.on]
    if spec.fiber_label is not None and not S.is_hirzebruch:
        raise SncViolation("fiber labels only apply to Hirzebruch-derived surfaces")

    label_record = None
    label_fresh = False
    if spec.fiber_label is not None:
        label_record = cat.fiber_record(spec.fiber_label)
        label_fresh = label_record is None
        if label_record is not None and label_record.id in spec.on:
            label_record = None  # already counted through `on`

    effective = list(on_records)
    if label_record is not None:
        effective.append(label_record)
    if len(effective) > 2:
        raise SncViolation(
            "at most two tracked curves may pass through a blown point"
        )
    if len(effective) == 2:
        meet = intersect(S, effective[0].klass, effective[1].klass)
        if meet <= 0:
            raise SncViolation(
                f"curves {effective[0].id!r} and {effective[1].id!r} do not meet "
                f"(intersection {meet})"
            )
    both_boundary = len(on_records) == 2 and all(r.in_boundary for r in on_records)
    if spec.node != both_boundary:
        raise SncViolation(
            "node flag must be set exactly for intersection points of two "
            "boundary curves"
        )

    k = len(S.blowups) + 1
    S2 = SurfaceModel(S.base, S.blowups + (spec,))
    e_vec = basis_class(S2, f"E{k}")

    transformed_ids = {rec.id for rec in effective}
    new_records: list[CurveRecord] = []
    for rec in cat.records:
        klass = pullback(S2, rec.klass)
        prov = rec.provenance
        if rec.id in transformed_ids:
            klass = klass - e_vec
            prov = Provenance(PROV_TRANSFORM, of=rec.id, label=prov.label)
        new_records.append(
            CurveRecord(rec.id, klass, _self_int(S2, klass), prov, rec.in_boundary)
        )
    new_records.append(
        CurveRecord(
            f"E{k}", e_vec, Fraction(-1), Provenance(PROV_EXCEPTIONAL), False
        )
    )

    if S.is_hirzebruch:
        covered = any(_is_vertical(S, rec.klass, "F") for rec in effective)
        if label_fresh and covered:
            raise SncViolation(
                f"fiber label {spec.fiber_label!r} is fresh but a tracked vertical "
                "curve already passes through the point"
            )
        if not covered:
            if label_fresh:
                fid = label = spec.fiber_label
                if not _id_ok(fid) or cat.has(fid):
                    raise SncViolation(
                        f"fiber label {fid!r} collides with a curve id or uses a "
                        "reserved pattern"
                    )
            else:
                fid = label = f"~f{k}"
            klass = basis_class(S2, "F") - e_vec
            new_records.append(
                CurveRecord(
                    fid, klass, _self_int(S2, klass),
                    Provenance(PROV_FIBER, label=label), False,
                )
            )
        if S.base.n == 0:
            z_covered = any(_is_vertical(S, rec.klass, "Z") for rec in effective)
            if not z_covered:
                klass = basis_class(S2, "Z") - e_vec
                new_records.append(
                    CurveRecord(
                        f"~z{k}", klass, _self_int(S2, klass),
                        Provenance(PROV_COFIBER), False,
                    )
                )

    if S.base.kind == P2:
        complete = False
    else:
        incidence_ok = bool(spec.on) or spec.fiber_label is not None
        pinned = len(effective) >= 2
        complete = cat.mori_complete and incidence_ok and (pinned or not S.blowups)

    return S2, CurveCatalog(tuple(new_records), complete, cat.declared)
