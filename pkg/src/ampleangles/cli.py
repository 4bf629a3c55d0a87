"""Command-line interface.

Subcommands::

    aa <pair-file>                      body of ample angles + classification
    classify <pair-file> [--expect-alf] classification report
    family <kind> --n <int> [--emit]    emit a family pair description
    blowup <pair-file> --type i|ii --on ID [--on ID] [--fiber-label L]
    verify --n-max <int>                run the verification battery

Pair files are JSON documents (see :mod:`ampleangles.pairfile`); ``-``
reads standard input, so commands compose:
``ampleangles family ALdP1 --n 2 | ampleangles classify -``.

Exit codes: 0 success, 1 failed expectation (``--expect-alf`` on a NotALF
pair, or verification mismatches), 2 input or precondition errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import AmpleAnglesError, IncompleteMoriCone, PairFileError
from .pairfile import pair_to_json, parse_pair
from .pairs import (
    FAMILY_KINDS,
    PairStatus,
    classify,
    family,
    blow_up_type_i,
    blow_up_type_ii,
    verify_theorems,
)
from .report import error_report, pair_report, to_json, verify_report
from .surfaces import BlowUpSpec


def _read_pair(path: str):
    if path == "-":
        return parse_pair(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise PairFileError(str(exc), path)
    return parse_pair(text)


def _classify_command(command: str, args) -> int:
    try:
        pair = _read_pair(args.pair_file)
        verdict = classify(pair)
    except IncompleteMoriCone as exc:
        sys.stdout.write(to_json(error_report(command, "incomplete-mori-cone", str(exc))))
        return 2
    except AmpleAnglesError as exc:
        sys.stdout.write(to_json(error_report(command, "input", str(exc))))
        return 2
    sys.stdout.write(to_json(pair_report(command, pair, verdict)))
    if command == "classify" and args.expect_alf and verdict.status is PairStatus.NOT_ALF:
        return 1
    return 0


def _family_command(args) -> int:
    try:
        pair = family(args.kind, args.n)
    except ValueError as exc:
        sys.stdout.write(to_json(error_report("family", "input", str(exc))))
        return 2
    sys.stdout.write(pair_to_json(pair))
    if not args.emit:
        sys.stderr.write(
            f"{args.kind} on F_{args.n}: boundary {', '.join(pair.boundary)}\n"
        )
    return 0


def _blowup_command(args) -> int:
    try:
        pair = _read_pair(args.pair_file)
        spec = BlowUpSpec(
            on=tuple(args.on or ()),
            fiber_label=args.fiber_label,
            node=args.type == "ii",
        )
        if args.type == "i":
            pair = blow_up_type_i(pair, spec)
        else:
            pair = blow_up_type_ii(pair, spec)
    except AmpleAnglesError as exc:
        sys.stdout.write(to_json(error_report("blowup", "input", str(exc))))
        return 2
    sys.stdout.write(pair_to_json(pair))
    return 0


def _verify_command(args) -> int:
    try:
        report = verify_theorems(args.n_max)
    except ValueError as exc:
        sys.stdout.write(to_json(error_report("verify", "input", str(exc))))
        return 2
    sys.stdout.write(to_json(verify_report(report)))
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ampleangles",
        description="Exact bodies of ample angles for log pairs on rational surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_aa = sub.add_parser("aa", help="compute the body of ample angles")
    p_aa.add_argument("pair_file", help="pair description file, or - for stdin")

    p_cl = sub.add_parser("classify", help="classify a pair")
    p_cl.add_argument("pair_file", help="pair description file, or - for stdin")
    p_cl.add_argument(
        "--expect-alf",
        action="store_true",
        help="exit with status 1 when the pair is NotALF",
    )

    p_fam = sub.add_parser("family", help="emit one of the rank-two families")
    p_fam.add_argument("kind", choices=FAMILY_KINDS)
    p_fam.add_argument("--n", type=int, required=True, help="Hirzebruch index n >= 0")
    p_fam.add_argument(
        "--emit",
        action="store_true",
        help="suppress the human summary on stderr (pure emission)",
    )

    p_bl = sub.add_parser("blowup", help="apply a structure blow-up to a pair")
    p_bl.add_argument("pair_file", help="pair description file, or - for stdin")
    p_bl.add_argument("--type", choices=("i", "ii"), required=True)
    p_bl.add_argument(
        "--on",
        action="append",
        metavar="ID",
        help="curve through the blown point (repeat for a node)",
    )
    p_bl.add_argument("--fiber-label", help="member of |F| containing the point")

    p_ver = sub.add_parser("verify", help="run the classification battery")
    p_ver.add_argument("--n-max", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("aa", "classify"):
        if not hasattr(args, "expect_alf"):
            args.expect_alf = False
        return _classify_command(args.command, args)
    if args.command == "family":
        return _family_command(args)
    if args.command == "blowup":
        return _blowup_command(args)
    return _verify_command(args)


if __name__ == "__main__":
    sys.exit(main())
