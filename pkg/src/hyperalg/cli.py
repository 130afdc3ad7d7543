"""Command-line front end.

Exit codes: 0 = success / all axioms hold; 1 = a verified mathematical
counterexample was found; 2 = usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys

from .axioms import (
    c_characteristic,
    characteristic,
    check_double_distributivity,
    check_hom,
    check_multigroup,
    check_multiring,
)
from .structures import get_structure

USAGE_ERROR = 2
MATH_FAIL = 1


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("HYPERALG_SEED", "0"))


def cmd_add(args) -> int:
    x = get_structure(args.structure)
    a = x.parse_elem(args.a)
    b = x.parse_elem(args.b)
    out = x.add(a, b)
    print(x.format_set(out))
    return 0


def cmd_sum(args) -> int:
    x = get_structure(args.structure)
    elems = [x.parse_elem(t) for t in args.elems]
    acc = x.singleton(elems[0])
    for e in elems[1:]:
        acc = x.add_sets(acc, x.singleton(e))
    print(x.format_set(acc))
    return 0


def cmd_verify(args) -> int:
    x = get_structure(args.structure)
    rng = random.Random(_seed(args))
    if args.level == "hyperfield-search":
        from .finite import search_hyperfield_multiplications

        if not x.is_finite:
            raise ValueError("hyperfield-search needs a finite structure")
        winners = search_hyperfield_multiplications(x.table)
        if winners:
            print(f"{len(winners)} univalued multiplications admit a hyperfield")
            return 0
        print("no univalued multiplication admits hyperfield")
        return 0
    if args.level == "multigroup":
        rep = check_multigroup(x, args.mode, args.budget, rng)
    elif args.level == "dd":
        rep = check_double_distributivity(x, args.budget, rng)
    else:
        rep = check_multiring(x, args.level, args.budget, rng)
    if args.format == "json":
        print(rep.to_json())
    else:
        for line in rep.to_lines():
            print(line)
        print(f"checked {rep.tuples_checked} tuples")
    return 0 if rep.passed else MATH_FAIL


def cmd_quotient(args) -> int:
    from .finite import FiniteMultistructure, mul_quotient

    with open(args.table, encoding="utf-8") as fh:
        x = FiniteMultistructure.from_json(fh.read())
    labels = [t.strip() for t in args.by.split(",")]
    q = mul_quotient(x, labels)
    print(q.to_json())
    return 0


def cmd_char(args) -> int:
    x = get_structure(args.structure)
    ch = characteristic(x, args.cap)
    cch = c_characteristic(x, args.cap)
    flag = "" if (ch.value or ch.stabilized) else f" (no stabilization below cap {args.cap})"
    print(f"characteristic={ch.value}{flag}")
    flag2 = "" if (cch.value or cch.stabilized) else f" (no stabilization below cap {args.cap})"
    print(f"c-characteristic={cch.value}{flag2}")
    return 0


HOM_TABLE = {
    "sign": ("R", "S", "sign map x -> x/|x| on the classical reals"),
    "sign-tr": ("TR", "S", "sign map on the real tropical carrier"),
    "S-K": ("S", "K", "collapse of signs onto the two-element carrier"),
    "phase": ("C", "Phi", "phase map z -> z/|z| on the classical field"),
    "phase-tc": ("TC", "Phi", "phase map on the complex tropical carrier"),
    "abs": ("C", "tri", "modulus map on the classical field"),
    "abs-tc": ("TC", "tri", "modulus map on the complex tropical carrier"),
    "abs-ultra": ("TC", "ultra", "modulus map into the ultratriangle carrier"),
    "logabs": ("TC", "trop", "log-modulus map"),
    "logabs-amoeba": ("C", "amoeba", "log-modulus on the classical field"),
    "modulus-maxplus": ("TC", "maxplus", "modulus into (R+, max, *): not a homomorphism"),
    "w": (None, None, "leading-term map on complex polynomials"),
}


def _hom_fn(name: str, x, y):
    from .homs import abs_map, log_abs, phase_map, sign_map

    if name in ("sign", "sign-tr"):
        return lambda v: {1: "1", -1: "-1", 0: "0"}[sign_map(v)]
    if name == "S-K":
        return lambda lbl: "0" if lbl == "0" else "1"
    if name in ("phase", "phase-tc"):
        return phase_map
    if name in ("abs", "abs-tc", "abs-ultra", "modulus-maxplus"):
        return abs_map
    if name in ("logabs", "logabs-amoeba"):
        return log_abs
    raise ValueError(name)


def cmd_hom(args) -> int:
    rng = random.Random(_seed(args))
    if args.name == "w":
        from .homs import check_w_hom

        rep = check_w_hom(args.budget, rng)
    else:
        if args.name not in HOM_TABLE:
            raise ValueError(f"unknown homomorphism {args.name!r}; try {sorted(HOM_TABLE)}")
        src, dst, _ = HOM_TABLE[args.name]
        x, y = get_structure(src), get_structure(dst)
        rep = check_hom(_hom_fn(args.name, x, y), x, y, args.budget, rng, name=args.name)
    if args.format == "json":
        print(rep.to_json())
    else:
        for line in rep.to_lines():
            print(line)
    return 0 if rep.is_homomorphism else MATH_FAIL


def cmd_poly(args) -> int:
    from .homs import hf_poly_eval, parse_hf_poly, zero_set_member

    x = get_structure(args.structure)
    p = parse_hf_poly(x, args.poly)
    point = tuple(x.parse_elem(t) for t in args.at.split(";"))
    val = hf_poly_eval(p, point)
    print(x.format_set(val))
    print(f"zero-member={'true' if zero_set_member(p, point) else 'false'}")
    return 0


def cmd_deq(args) -> int:
    from .deq import trace_rows

    schedule = [float(t) for t in args.h.split(",")]
    rows = trace_rows(args.family, args.a, args.b, schedule)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["h", "a", "b", "result", "reference", "error"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_spectrum(args) -> int:
    from .finite import FiniteMultistructure, prime_ideals

    if args.table.endswith(".json") or os.path.exists(args.table):
        with open(args.table, encoding="utf-8") as fh:
            x = FiniteMultistructure.from_json(fh.read())
    else:
        s = get_structure(args.table)
        if not s.is_finite:
            raise ValueError("spectrum needs a finite structure")
        x = s.table
    entries = prime_ideals(x)
    for entry in entries:
        members = ",".join(sorted(str(m) for m in entry["ideal"]))
        print(f"prime-ideal={{{members}}}")
    print(f"count={len(entries)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperalg",
        description=(
            "Set-valued arithmetic over tropical hyperfields. Structures: "
            "K, Q1, S, F2, M, TC, TR, Phi, tri, ultra, trop, amoeba, quat, "
            "mono, padic:p:L, zmod:n, powers:p:depth, finite:FILE. Elements: "
            "complex as m∠theta (ASCII m@theta) or x+yi; quaternions as "
            "x,y,z,t; monomials as 3t^2; tropical numbers as -inf or reals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("add", help="binary multivalued sum")
    p.add_argument("structure")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_add)

    p = sub.add_parser("sum", help="n-ary multivalued sum")
    p.add_argument("structure")
    p.add_argument("elems", nargs="+")
    p.set_defaults(fn=cmd_sum)

    p = sub.add_parser("verify", help="run axiom checks")
    p.add_argument("structure")
    p.add_argument(
        "--level",
        default="multigroup",
        choices=["multigroup", "multiring", "hyperring", "hyperfield", "dd", "hyperfield-search"],
    )
    p.add_argument("--mode", default="full", choices=["full", "minimal"])
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("quotient", help="multiplicative quotient of a finite table")
    p.add_argument("table", help="JSON table file")
    p.add_argument("--by", required=True, help="comma-separated labels of S")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("char", help="characteristic and C-characteristic")
    p.add_argument("structure")
    p.add_argument("--cap", type=int, default=64)
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("hom", help="verify a named homomorphism")
    p.add_argument("name", help=f"one of {sorted(HOM_TABLE)}")
    p.add_argument("--budget", type=int, default=300)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("poly", help="evaluate a polynomial over a structure")
    p.add_argument("structure")
    p.add_argument("poly", help="e.g. '2X^2 + 1'")
    p.add_argument("--at", required=True, help="semicolon-separated point coordinates")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("deq", help="dequantization trace (CSV)")
    p.add_argument("family", choices=["lm", "tri", "complex"])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--h", default="1,0.1,0.01,0.001")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.set_defaults(fn=cmd_deq)

    p = sub.add_parser("spectrum", help="prime ideals of a finite multiring")
    p.add_argument("table", help="structure name or JSON table file")
    p.set_defaults(fn=cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
