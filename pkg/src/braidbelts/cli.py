"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 non-orientable belt, 4 unsupported
request, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import _kernels
from .belt import (
    HalfInt,
    ZERO,
    evaluate_word,
    is_orientable,
    is_pure_belt,
    parse_twist,
    parse_word,
    word_permutation,
)
from .canonical import braid_only_word, canonical_pretty
from .census import (
    census_by_length,
    census_by_max_sum,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
)
from .errors import (
    BeltError,
    ConflictingName,
    EvenLength,
    InexactDivision,
    NonIntegerTwists,
    NonOrientable,
    NotHalfOdd,
    NotPure,
    ParseError,
    Unsupported,
)
from .jones import boundary_report, jones_of, jones_skein_oracle
from .knots import identify, load_table_csv, seed_table
from .laurent import LaurentPoly
from .particles import check_trefoil_families, finkelstein_label, helon_charge

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NON_ORIENTABLE = 3
EXIT_UNSUPPORTED = 4
EXIT_INTERNAL = 5

_EXIT_CODES = (
    (NonOrientable, EXIT_NON_ORIENTABLE),
    (Unsupported, EXIT_UNSUPPORTED),
    (NotHalfOdd, EXIT_UNSUPPORTED),
    (InexactDivision, EXIT_INTERNAL),
    (ParseError, EXIT_INPUT),
    (EvenLength, EXIT_INPUT),
    (ConflictingName, EXIT_INPUT),
    (NonIntegerTwists, EXIT_INPUT),
    (NotPure, EXIT_INPUT),
)

# lets "-1/2" and "-2" through as positionals
_NEGATIVE_NUMBER = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _twist_strings(t) -> list[str]:
    return [str(h) for h in t]


def _table(args):
    if args.knot_table:
        return load_table_csv(args.knot_table)
    return seed_table()


def cmd_eval(args) -> int:
    word = parse_word(" ".join(args.word))
    start = parse_twist(args.start) if args.start else ZERO
    t = evaluate_word(word, start)
    perm = word_permutation(word)
    obj = {
        "word": str(word),
        "twist": _twist_strings(t),
        "orientable": is_orientable(t),
        "pure": is_pure_belt(t),
        "permutation": list(perm.image),
    }
    if args.format == "csv":
        print("twist,orientable,pure,permutation")
        print(f"{t},{obj['orientable']},{obj['pure']},{perm}")
        return EXIT_OK
    text = (
        f"{t}\n"
        f"orientable={'yes' if obj['orientable'] else 'no'}\n"
        f"pure={'yes' if obj['pure'] else 'no'}\n"
        f"permutation={perm}"
    )
    _emit(args, text, obj)
    return EXIT_OK


def cmd_braidword(args) -> int:
    t = parse_twist(args.twist)
    word = braid_only_word(t)
    if args.verify and evaluate_word(word, ZERO) != t:
        print(f"round trip failed for [{t}]", file=sys.stderr)
        return EXIT_INTERNAL
    pretty = canonical_pretty(t)
    obj = {"twist": _twist_strings(t), "word": str(word), "pretty": pretty}
    _emit(args, pretty if args.pretty else str(word), obj)
    return EXIT_OK


def cmd_jones(args) -> int:
    t = parse_twist(args.twist)
    poly = jones_of(t)
    if args.check_skein and poly != jones_skein_oracle(*t.entries):
        print("closed form and skein recursion disagree", file=sys.stderr)
        return EXIT_INTERNAL
    obj = {"twist": _twist_strings(t), "jones": poly.to_json_obj(), "text": poly.format(False)}
    _emit(args, poly.format(descending=False), obj)
    return EXIT_OK


def cmd_boundary(args) -> int:
    t = parse_twist(args.twist)
    rep = boundary_report(t)
    obj = {
        "twist": _twist_strings(t),
        "components": rep.components,
        "is_knot": rep.is_knot,
        "orientable": rep.parity_class != "mixed",
        "jones": rep.jones.to_json_obj() if rep.jones is not None else None,
    }
    lines = [f"components={rep.components}", f"knot={'yes' if rep.is_knot else 'no'}"]
    if rep.jones is not None:
        lines.append(f"jones={rep.jones.format(descending=False)}")
    elif rep.is_knot:
        lines.append("jones=unsupported (non-orientable belt)")
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK


def cmd_identify(args) -> int:
    table = _table(args)
    if args.poly is not None:
        poly = LaurentPoly.from_compact(args.poly)
        twist = None
    else:
        if not args.twist:
            raise ParseError("give a twist vector or --poly")
        twist = parse_twist(args.twist)
        poly = jones_of(twist)
    name = identify(poly, table)
    obj = {
        "twist": _twist_strings(twist) if twist is not None else None,
        "jones": poly.to_json_obj(),
        "knot": name,
        "note": "Jones polynomial match; consistent with, not proof of, the knot type",
    }
    _emit(args, name if name is not None else "unidentified", obj)
    return EXIT_OK


def cmd_particle(args) -> int:
    if args.table:
        rows = []
        lines = []
        for row in check_trefoil_families(args.sign):
            lab = row["computed"]
            rows.append(
                {
                    **lab.to_json_obj(),
                    "listed_Q": str(row["listed_charge"]),
                    "charge_matches": row["charge_matches"],
                    "r_consistent": row["r_consistent"],
                    "listed_pair_Q": str(row["listed_pair_charge"]),
                }
            )
            flag = "" if row["r_consistent"] else "  [listed m' disagrees with r]"
            lines.append(
                f"(w,r)=({lab.w},{lab.r})  D^{lab.j}_{{{lab.m},{lab.m_prime}}}  Q={lab.charge}{flag}"
            )
        _emit(args, "\n".join(lines), rows)
        return EXIT_OK
    if args.N is None or args.w is None or args.r is None:
        raise ParseError("particle needs N w r, or --table")
    lab = finkelstein_label(args.N, args.w, args.r, args.sign)
    obj = lab.to_json_obj()
    text = f"D^{lab.j}_{{{lab.m},{lab.m_prime}}}  Q={lab.charge}  family={obj['family_hint']}"
    _emit(args, text, obj)
    return EXIT_OK


def cmd_helon(args) -> int:
    t = parse_twist(args.twist)
    h = helon_charge(t)
    obj = {
        "twist": _twist_strings(t),
        "charge_thirds": h.charge_thirds,
        "charge": str(h.charge),
        "kind": h.kind,
        "no_charge_mixing": h.no_charge_mixing,
    }
    _emit(args, f"Q={h.charge}e  kind={h.kind}  no_charge_mixing={h.no_charge_mixing}", obj)
    return EXIT_OK


def cmd_census(args) -> int:
    table = _table(args)
    orbit = not args.no_orbit
    total = HalfInt.of(args.sum) if args.sum is not None else None
    length = args.length
    if args.table1 or args.table2:
        length = 3
        total = HalfInt.of("3/2" if args.table1 else "1/2")
    if length is not None:
        rows = census_by_length(
            length, orbit=orbit, total=total, table=table, backend_name=args.backend
        )
    elif args.max_sum is not None:
        rows = census_by_max_sum(HalfInt.of(args.max_sum), orbit=orbit, table=table)
        if total is not None:
            rows = [r for r in rows if r.sum == total]
    else:
        raise ParseError("census needs --length, --max-sum, --table1 or --table2")
    if args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    elif args.format == "json":
        print(rows_to_json(rows))
    else:
        sys.stdout.write(rows_to_text(rows))
    return EXIT_OK


def cmd_table(args) -> int:
    print(_table(args).to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--knot-table", metavar="CSV", help="extra knot records to merge")

    parser = argparse.ArgumentParser(
        prog="braidbelts", description="Exact algebra of braided 3-belts."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="pure twist word of a braid word")
    p.add_argument("word", nargs="*", help="tokens 1 2 3 -1 -2 -3, leftmost applied last")
    p.add_argument("--start", help='base twists, e.g. "1/2 0 0"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("braidword", parents=[common], help="canonical braid-only word")
    p.add_argument("twist", nargs=3)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--pretty", action="store_true", help="print as σ powers")
    p.set_defaults(func=cmd_braidword)

    p = sub.add_parser("jones", parents=[common], help="Jones polynomial of the boundary knot")
    p.add_argument("twist", nargs=3)
    p.add_argument("--check-skein", action="store_true", help="cross-check against the skein recursion")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("boundary", parents=[common], help="boundary components")
    p.add_argument("twist", nargs=3)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("identify", parents=[common], help="name the boundary knot")
    p.add_argument("twist", nargs="*")
    p.add_argument("--poly", help="identify a polynomial given as exp:coef;... in t^(1/2) units")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("particle", parents=[common], help="SU_q(2) trefoil label")
    p.add_argument("N", nargs="?", type=int)
    p.add_argument("w", nargs="?", type=int)
    p.add_argument("r", nargs="?", type=int)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--table", action="store_true", help="check the four trefoil families")
    p.set_defaults(func=cmd_particle)

    p = sub.add_parser("helon", parents=[common], help="Helon electric charge")
    p.add_argument("twist", nargs=3)
    p.set_defaults(func=cmd_helon)

    p = sub.add_parser("census", parents=[common], help="enumerate knotted boundaries")
    p.add_argument("--length", type=int)
    p.add_argument("--max-sum")
    p.add_argument("--sum", help="keep only classes with this twist sum")
    p.add_argument("--table1", action="store_true")
    p.add_argument("--table2", action="store_true")
    p.add_argument("--no-orbit", action="store_true", help="keep ribbon order")
    p.add_argument("--backend", choices=_kernels.available_backends())
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table", parents=[common], help="dump the knot table as JSON")
    p.set_defaults(func=cmd_table)

    for sp in [parser, *sub.choices.values()]:
        sp._negative_number_matcher = _NEGATIVE_NUMBER
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BeltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                return code
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
