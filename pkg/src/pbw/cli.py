"""Command-line front end.

Exit codes for `check`: 0 pass, 1 fail, 2 invalid datum.  All output is
deterministic; polynomial terms print in decreasing rewriting order.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from functools import cmp_to_key

from .algebra import format_poly
from .criterion import (
    bracket_table,
    check_pbw,
    forced_power_from_jacobi,
    forced_serre_from_power,
    generic_redundancies,
)
from .datumio import datum_to_dict, load_datum, save_datum
from .exprs import ExprError, parse_expr
from .presets import PRESET_NAMES, build_preset
from .rewrite import build_rules, dimension, hilbert, normal_form, prec_diamond_cmp
from .words import format_word, lyndon_up_to, parse_word, shirshov_decompose

_TERM_ORDER = cmp_to_key(lambda a, b: -prec_diamond_cmp(a, b))


def _load(path):
    try:
        d = load_datum(path)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(2)
    violations = d.validate()
    if violations:
        print("invalid datum:", file=sys.stderr)
        for v in violations:
            print(f"  - {v}", file=sys.stderr)
        raise SystemExit(2)
    return d


def _cmd_check(args):
    d = _load(args.file)
    report = check_pbw(d, mode=args.mode)
    rules = build_rules(d, report.table)
    dim = dimension(rules)
    if args.json:
        payload = report.to_json()
        payload["dimension"] = dim
        print(json.dumps(payload, indent=1))
    else:
        for line in report.lines():
            print(line)
        print(f"{'PASS' if report.passed else 'FAIL'}, dim {dim if dim is not None else 'infinite'}")
    return 0 if report.passed else 1


def _cmd_nf(args):
    d = _load(args.file)
    rules = build_rules(d, bracket_table(d))
    try:
        poly = parse_expr(args.expr, d)
    except ExprError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    nf = normal_form(rules, poly)
    print(format_poly(nf, order_key=_TERM_ORDER))
    return 0


def _cmd_dim(args):
    d = _load(args.file)
    rules = build_rules(d, bracket_table(d))
    dim = dimension(rules)
    print(dim if dim is not None else "infinite")
    return 0


def _cmd_hilbert(args):
    if args.max_deg < 0:
        print("error: --max-deg must be >= 0", file=sys.stderr)
        return 2
    d = _load(args.file)
    rules = build_rules(d, bracket_table(d))
    coeffs = hilbert(rules, args.max_deg)
    print(" ".join(str(c) for c in coeffs))
    return 0


def _cmd_lyndon(args):
    try:
        words = lyndon_up_to(args.theta, args.max_len)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    for w in words:
        print(format_word(w))
    return 0


def _cmd_shirshov(args):
    try:
        w = parse_word(args.word)
        v, u = shirshov_decompose(w)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(f"({format_word(v)}, {format_word(u)})")
    return 0


def _parse_params(pairs):
    params = {}
    for p in pairs or []:
        if "=" not in p:
            raise SystemExit(f"bad parameter {p!r}; use key=value")
        k, v = p.split("=", 1)
        try:
            params[k] = int(v)
        except ValueError:
            params[k] = Fraction(v)
    return params


def _cmd_preset(args):
    try:
        preset = build_preset(args.name, **_parse_params(args.param))
    except (TypeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output:
        save_datum(preset.datum, args.output)
        print(f"wrote {args.output}")
    else:
        print(json.dumps(datum_to_dict(preset.datum), indent=1, sort_keys=True))
    dim = preset.expected_dimension
    print(f"# {preset.name}: expected {'dim ' + str(dim) if dim is not None else 'infinite dimension'}")
    return 0


def _cmd_redundant(args):
    d = _load(args.file)
    table = bracket_table(d)
    found = []
    members = set(d.L)
    for u in d.L:
        for v in d.L:
            if u < v and d.heights.get(u) == 2 and u + u + v in set(d.reds):
                rhs = forced_serre_from_power(d, u, v, "left")
                if rhs == d.reds[u + u + v]:
                    found.append(f"red_{format_word(u + u + v)} is forced by the height-2 power at {format_word(u)}")
            if u < v and d.heights.get(v) == 2 and u + v + v in set(d.reds):
                rhs = forced_serre_from_power(d, u, v, "right")
                if rhs == d.reds[u + v + v]:
                    found.append(f"red_{format_word(u + v + v)} is forced by the height-2 power at {format_word(v)}")
    for level in ("rank2-12", "b2-11212", "b2-112", "b2-12"):
        try:
            forced = forced_power_from_jacobi(d, table, level)
        except ValueError:
            continue
        if forced is None:
            continue
        _c, rhs, word, n = forced
        target = d.reds.get(word) if n == 1 else d.redhats.get(word)
        if target is not None and rhs == target:
            kind = "red" if n == 1 else "redhat"
            found.append(f"{kind}_{format_word(word)} is forced by the Jacobi combination ({level})")
    for kind, w in generic_redundancies(d, table):
        found.append(f"{kind}_{format_word(w)} reduces to zero without its own rule")
    if found:
        seen = set()
        for line in found:
            if line not in seen:
                seen.add(line)
                print(line)
    else:
        print("no redundant relations detected")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(prog="pbw", description="PBW-basis toolkit for character Hopf algebra presentations")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="run the PBW criterion on a datum file")
    p.add_argument("file")
    p.add_argument("--mode", choices=["full", "reduced"], default="full")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("file")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("dim", help="dimension of the quotient")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("hilbert", help="counts of basis words by length")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("lyndon", help="list Lyndon words")
    p.add_argument("--theta", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_lyndon)

    p = sub.add_parser("shirshov", help="decomposition of a word at its minimal ending")
    p.add_argument("word")
    p.set_defaults(func=_cmd_shirshov)

    p = sub.add_parser("preset", help="emit a named example datum")
    p.add_argument("name", choices=PRESET_NAMES)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_preset)

    p = sub.add_parser("redundant", help="list relations provably implied by the others")
    p.add_argument("file")
    p.set_defaults(func=_cmd_redundant)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
