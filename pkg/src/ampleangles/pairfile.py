"""The JSON pair-description format and its round-trip with LogPair.

A document looks like::

    {
      "base": {"kind": "hirzebruch", "n": 2},
      "curves": [{"id": "C1", "class": "Z"},
                 {"id": "C2", "class": {"Z": 1, "F": 4}}],
      "blowups": [{"on": ["C1", "C2"], "node": true}],
      "boundary": ["C1", "C2", "E1"]
    }

Curve classes are given over the base Picard basis, either as a generator
name ("Z", "F", "H") or as a coefficient map; rationals may be written as
ints or "p/q" strings.  Blow-ups apply in order; exceptional curves are
addressed as "E1", "E2", ... and a labelled fiber by its label.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import AmpleAnglesError, PairFileError
from .pairs import LogPair
from .surfaces import (
    Base,
    BlowUpSpec,
    DivisorClass,
    HIRZEBRUCH,
    P2,
    SurfaceModel,
    base_catalog,
    blow_up,
)

_BASE_KINDS = (P2, HIRZEBRUCH)


def parse_fraction(value: Any, location: str) -> Fraction:
    if isinstance(value, bool):
        raise PairFileError("expected an exact number", location)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise PairFileError(f"bad fraction {value!r}: {exc}", location)
    raise PairFileError(
        f"numbers must be ints or 'p/q' strings, got {type(value).__name__}",
        location,
    )


def _parse_base(doc: Any) -> Base:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise PairFileError("expected an object with a 'kind' field", "base")
    kind = doc["kind"]
    if kind not in _BASE_KINDS:
        raise PairFileError(f"unknown base kind {kind!r}", "base.kind")
    if kind == P2:
        if "n" in doc:
            raise PairFileError("p2 takes no index n", "base.n")
        return Base(P2)
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise PairFileError("hirzebruch needs an integer n >= 0", "base.n")
    return Base(HIRZEBRUCH, n)


def _parse_class(value: Any, base: Base, location: str) -> DivisorClass:
    names = base.basis_names
    if isinstance(value, str):
        if value not in names:
            raise PairFileError(
                f"named class {value!r} is not a generator of this base "
                f"(expected one of {list(names)})",
                location,
            )
        return DivisorClass(
            tuple(Fraction(1 if nm == value else 0) for nm in names)
        )
    if isinstance(value, dict):
        unknown = set(value) - set(names)
        if unknown:
            raise PairFileError(
                f"unknown basis names {sorted(unknown)} (base has {list(names)})",
                location,
            )
        return DivisorClass(
            tuple(
                parse_fraction(value.get(nm, 0), f"{location}.{nm}") for nm in names
            )
        )
    raise PairFileError("a class is a generator name or a coefficient map", location)


def parse_pair(text: str | bytes | dict) -> LogPair:
    """Build the described LogPair, replaying declared curves and blow-ups."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PairFileError(f"invalid JSON: {exc}", "")
    else:
        doc = text
    if not isinstance(doc, dict):
        raise PairFileError("top level must be an object", "")
    extra = set(doc) - {"base", "curves", "blowups", "boundary"}
    if extra:
        raise PairFileError(f"unknown fields {sorted(extra)}", "")

    base = _parse_base(doc.get("base"))
    S = SurfaceModel(base)

    curves_doc = doc.get("curves", [])
    if not isinstance(curves_doc, list):
        raise PairFileError("'curves' must be a list", "curves")
    declared = []
    seen_ids = set()
    for i, entry in enumerate(curves_doc):
        where = f"curves[{i}]"
        if not isinstance(entry, dict) or "id" not in entry or "class" not in entry:
            raise PairFileError("curve entries need 'id' and 'class'", where)
        cid = entry["id"]
        if not isinstance(cid, str):
            raise PairFileError("curve id must be a string", f"{where}.id")
        if cid in seen_ids:
            raise PairFileError(f"duplicate curve id {cid!r}", f"{where}.id")
        seen_ids.add(cid)
        declared.append((cid, _parse_class(entry["class"], base, f"{where}.class")))

    try:
        cat = base_catalog(S, declared)
    except AmpleAnglesError as exc:
        raise PairFileError(str(exc), "curves")
    except ValueError as exc:
        raise PairFileError(str(exc), "curves")

    blowups_doc = doc.get("blowups", [])
    if not isinstance(blowups_doc, list):
        raise PairFileError("'blowups' must be a list", "blowups")
    for i, entry in enumerate(blowups_doc):
        where = f"blowups[{i}]"
        if not isinstance(entry, dict):
            raise PairFileError("blow-up entries are objects", where)
        extra = set(entry) - {"on", "fiber_label", "node"}
        if extra:
            raise PairFileError(f"unknown fields {sorted(extra)}", where)
        on = entry.get("on", [])
        if not isinstance(on, list) or not all(isinstance(x, str) for x in on):
            raise PairFileError("'on' must be a list of curve ids", f"{where}.on")
        label = entry.get("fiber_label")
        if label is not None and not isinstance(label, str):
            raise PairFileError("'fiber_label' must be a string", f"{where}.fiber_label")
        node = entry.get("node", False)
        if not isinstance(node, bool):
            raise PairFileError("'node' must be a boolean", f"{where}.node")
        spec = BlowUpSpec(tuple(on), label, node)
        try:
            S, cat = blow_up(S, cat, spec)
        except AmpleAnglesError as exc:
            raise PairFileError(str(exc), where)

    boundary_doc = doc.get("boundary", [])
    if not isinstance(boundary_doc, list) or not all(
        isinstance(x, str) for x in boundary_doc
    ):
        raise PairFileError("'boundary' must be a list of curve ids", "boundary")
    try:
        return LogPair.create(S, cat, tuple(boundary_doc))
    except AmpleAnglesError as exc:
        raise PairFileError(str(exc), "boundary")


def _emit_class(base: Base, klass: DivisorClass) -> Any:
    names = base.basis_names
    nonzero = [(nm, q) for nm, q in zip(names, klass.coeffs) if q != 0]
    if len(nonzero) == 1 and nonzero[0][1] == 1:
        return nonzero[0][0]
    return {
        nm: (int(q) if q.denominator == 1 else str(q)) for nm, q in nonzero
    }


def emit_pair(pair: LogPair) -> dict:
    """Normal-form pair description; ``parse_pair`` round-trips it exactly."""
    S = pair.surface
    base: dict[str, Any] = {"kind": S.base.kind}
    if S.base.kind == HIRZEBRUCH:
        base["n"] = S.base.n
    curves = []
    base_rank = S.base.rank
    for cid in pair.catalog.declared:
        rec = pair.catalog.get(cid)
        base_class = DivisorClass(rec.klass.coeffs[:base_rank])
        curves.append({"id": cid, "class": _emit_class(S.base, base_class)})
    blowups = []
    for spec in S.blowups:
        entry: dict[str, Any] = {"on": list(spec.on)}
        if spec.fiber_label is not None:
            entry["fiber_label"] = spec.fiber_label
        entry["node"] = spec.node
        blowups.append(entry)
    return {
        "base": base,
        "curves": curves,
        "blowups": blowups,
        "boundary": list(pair.boundary),
    }


def pair_to_json(pair: LogPair) -> str:
    return json.dumps(emit_pair(pair), indent=2) + "\n"
