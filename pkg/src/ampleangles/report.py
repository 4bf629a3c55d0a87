"""Deterministic JSON reports (schema ``alf-report/1``).

Every rational is serialized as an exact fraction string in lowest terms
("3", "-2", "1/2"); reports never contain floating point numbers.  Field
order is fixed so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .anglebody import AmpleAngleBody
from .pairs import LogPair, Verdict, VerifyReport
from .surfaces import format_class

SCHEMA = "alf-report/1"


def frac(q: Fraction) -> str:
    return str(Fraction(q))


def _constraint_entries(pair: LogPair, body: AmpleAngleBody) -> list[dict]:
    entries = []
    for con, prov in zip(body.body.constraints, body.provenance):
        entry: dict[str, Any] = {
            "coeffs": [frac(v) for v in con.a],
            "const": frac(con.c),
            "relation": ">" if con.strict else ">=",
        }
        if prov.kind == "curve":
            entry["provenance"] = {
                "curve": prov.curve_id,
                "class": format_class(pair.surface, prov.curve_class)
                if prov.curve_class is not None
                else None,
            }
        else:
            entry["provenance"] = f"{prov.kind}:beta{prov.axis + 1}"
        entries.append(entry)
    return entries


def pair_report(command: str, pair: LogPair, verdict: Verdict) -> dict:
    body = verdict.body
    sample = body.body.sample_point()
    return {
        "schema": SCHEMA,
        "command": command,
        "status": verdict.status.value,
        "r": pair.r,
        "surface": {
            "base": pair.surface.base.kind,
            "n": pair.surface.base.n if pair.surface.is_hirzebruch else None,
            "blowups": len(pair.surface.blowups),
            "rank": pair.surface.rank,
        },
        "boundary": list(pair.boundary),
        "constraints": _constraint_entries(pair, body),
        "closure_vertices": [
            [frac(v) for v in vertex] for vertex in body.body.vertices()
        ],
        "sample_point": [frac(v) for v in sample] if sample is not None else None,
        "diagnostics": list(verdict.diagnostics),
    }


def error_report(command: str, kind: str, message: str) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "status": "error",
        "error": {"kind": kind, "message": message},
    }


def verify_report(report: VerifyReport) -> dict:
    return {
        "schema": SCHEMA,
        "command": "verify",
        "n_max": report.n_max,
        "rows": [
            {"case": row.case, "pass": row.passed, "detail": row.detail}
            for row in report.rows
        ],
        "all_pass": report.all_pass,
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
