"""Mori-cone generators and exact ampleness/nefness oracles.

Ampleness is decided Kleiman-style: strict positivity against the Mori
generators.  When the catalog's completeness certificate is absent the
oracles return ``None`` (unknown) rather than guessing; the verdict
relative to tracked curves alone is available separately for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from . import fme
from .errors import DimensionMismatch
from .surfaces import (
    P2,
    CurveCatalog,
    CurveRecord,
    DivisorClass,
    SurfaceModel,
    basis_class,
    intersect,
)


@dataclass(frozen=True)
class MoriGenerators:
    """Curve classes generating (when ``complete``) the Mori cone.

    ``ids`` runs parallel to ``classes``; entries are ``None`` for base
    movable classes that are not tied to a single catalog record.
    """

    classes: tuple[DivisorClass, ...]
    ids: tuple[Optional[str], ...]
    complete: bool


def negative_curves(S: SurfaceModel, cat: CurveCatalog) -> tuple[CurveRecord, ...]:
    """Catalog records with negative cached self-intersection."""
    return tuple(rec for rec in cat.records if rec.self_int < 0)


def _in_cone(S: SurfaceModel, target: DivisorClass, gens: list[DivisorClass]) -> bool:
    """Whether ``target`` is a non-negative rational combination of ``gens``."""
    if not gens:
        return target.is_zero()
    m = len(gens)
    rows = []
    for coord in range(S.rank):
        mult = lcm(
            *[g.coeffs[coord].denominator for g in gens],
            target.coeffs[coord].denominator,
        )
        a = tuple(int(g.coeffs[coord] * mult) for g in gens)
        c = -int(target.coeffs[coord] * mult)
        rows.append((a, c, False))
        rows.append((tuple(-v for v in a), -c, False))
    for i in range(m):
        unit = tuple(1 if j == i else 0 for j in range(m))
        rows.append((unit, 0, False))
    return fme.feasible(rows, m)


def mori_generators(S: SurfaceModel, cat: CurveCatalog) -> MoriGenerators:
    """Generators of the Mori cone as tracked by the catalog.

    P^2 gives {H} and F_n gives {Z, F}.  On blown-up surfaces the list is
    the catalog's negative curves, augmented by base movable classes (F,
    and Z on F_0-derived surfaces) whenever they are not already
    non-negative combinations of the negatives.  The completeness flag is
    copied from the catalog.
    """
    classes: list[DivisorClass] = []
    ids: list[Optional[str]] = []
    for rec in negative_curves(S, cat):
        classes.append(rec.klass)
        ids.append(rec.id)
    if S.base.kind == P2:
        movables = [basis_class(S, "H")]
    elif S.base.n == 0:
        movables = [basis_class(S, "Z"), basis_class(S, "F")]
    else:
        movables = [basis_class(S, "F")]
    for mov in movables:
        if not _in_cone(S, mov, classes):
            classes.append(mov)
            ids.append(None)
    return MoriGenerators(tuple(classes), tuple(ids), cat.mori_complete)


def _check_class(S: SurfaceModel, D: DivisorClass):
    if len(D) != S.rank:
        raise DimensionMismatch(
            f"class of length {len(D)} on a surface of rank {S.rank}"
        )


def tracked_positive(
    S: SurfaceModel, cat: CurveCatalog, D: DivisorClass, strict: bool
) -> bool:
    """Positivity against tracked generators only (degraded certainty)."""
    _check_class(S, D)
    gens = mori_generators(S, cat)
    values = [intersect(S, D, g) for g in gens.classes]
    return all(v > 0 for v in values) if strict else all(v >= 0 for v in values)


def is_ample(
    S: SurfaceModel, cat: CurveCatalog, D: DivisorClass
) -> Optional[bool]:
    """True/False when the generator list is complete, ``None`` otherwise."""
    _check_class(S, D)
    gens = mori_generators(S, cat)
    if not gens.complete:
        return None
    return all(intersect(S, D, g) > 0 for g in gens.classes)


def is_nef(S: SurfaceModel, cat: CurveCatalog, D: DivisorClass) -> Optional[bool]:
    """Non-strict variant of :func:`is_ample`."""
    _check_class(S, D)
    gens = mori_generators(S, cat)
    if not gens.complete:
        return None
    return all(intersect(S, D, g) >= 0 for g in gens.classes)


def ample_values(
    S: SurfaceModel, cat: CurveCatalog, D: DivisorClass
) -> tuple[tuple[Optional[str], Fraction], ...]:
    """Pairings of D against every generator, for diagnostics."""
    _check_class(S, D)
    gens = mori_generators(S, cat)
    return tuple(
        (cid, intersect(S, D, g)) for cid, g in zip(gens.ids, gens.classes)
    )
