"""Command line interface.

Exit status is 0 on success, 1 when the input is well formed but
mathematically invalid (or the oracle disagrees with the classifier), and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classification as cl
from .cones import cone_params
from .fans import (
    FanError,
    K_squared,
    build_fan,
    is_ldp,
    lattice_point_counts,
    parse_generators,
    picard_inequality_holds,
    polar_index,
    r_invariants,
    scott_inequality_holds,
    surface_index,
)
from .graphs import canonical_key, graph_of, to_dot
from .lattice import LatticeError
from .oracle import DEFAULT_BOX, OracleError, compare_with_classifier, oracle_classify

_ROMAN = [(10, "x"), (9, "ix"), (5, "v"), (4, "iv"), (1, "i")]


def roman(n: int) -> str:
    out = ""
    for value, sym in _ROMAN:
        while n >= value:
            out += sym
            n -= value
    return out


def _fmt_vec(v) -> str:
    return f"({v[0]},{v[1]})"


def _fmt_triple(t) -> str:
    return " | ".join(f"{p},{q}" for p, q in t)


def render_table(records) -> str:
    rows = [("No.", "(p1,q1 | p2,q2 | p3,q3)", "n3", "r", "surface", "H")]
    for i, rec in enumerate(records, 1):
        rows.append(
            (
                f"({roman(i)})",
                _fmt_triple(rec.triple),
                _fmt_vec(rec.n3),
                "(" + ",".join(map(str, rec.r)) + ")",
                rec.label,
                "x".join(map(str, rec.group_factors)) or "1",
            )
        )
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _parse_fan_arg(parser, text):
    try:
        gens = parse_generators(text)
    except ValueError as exc:
        parser.error(f"cannot parse generators: {exc}")
    if len(gens) < 3:
        parser.error(f"a complete fan needs at least 3 generators, got {len(gens)}")
    return gens


def analyze_fan(fan) -> dict:
    index = surface_index(fan)
    ldp = is_ldp(fan)
    report = {
        "nu": fan.nu,
        "generators": [list(v) for v in fan.generators],
        "cones": [cl.cone_summary(c) for c in fan.cones],
        "r": r_invariants(fan),
        "rho": fan.nu - 2,
        "index": index,
        "K2": str(K_squared(fan)),
        "ldp": ldp,
        "picard_inequality": picard_inequality_holds(fan, index),
    }
    if ldp:
        b, i = lattice_point_counts(fan)
        report["polar_index"] = polar_index(fan)
        report["boundary_points"] = b
        report["interior_points"] = i
        report["K2_at_least_nu_over_index"] = K_squared(fan) * index >= fan.nu
    if index >= 2:
        report["scott_inequality"] = scott_inequality_holds(fan)
    return report


def _analysis_text(rep: dict) -> str:
    lines = [f"generators: {'; '.join(_fmt_vec(v) for v in rep['generators'])}", f"nu: {rep['nu']}"]
    for k, c in enumerate(rep["cones"], 1):
        lines.append(
            f"cone {k}: p={c['p']} q={c['q']} p_hat={c['p_hat']} l={c['local_index']} "
            f"s={c['s']} hj={c['hj']} K(E)^2={c['K(E)^2']}"
        )
    lines.append(f"r: ({','.join(map(str, rep['r']))})")
    lines.append(f"rho: {rep['rho']}")
    lines.append(f"index (lcm of local indices): {rep['index']}")
    if "polar_index" in rep:
        lines.append(f"index (polar polygon): {rep['polar_index']}")
    lines.append(f"K^2: {rep['K2']}")
    lines.append(f"LDP: {'yes' if rep['ldp'] else 'no'}")
    if "boundary_points" in rep:
        lines.append(f"lattice points: boundary {rep['boundary_points']}, interior {rep['interior_points']}")
        lines.append(f"K^2 >= nu/index: {rep['K2_at_least_nu_over_index']}")
    lines.append(f"Picard inequality: {rep['picard_inequality']}")
    if "scott_inequality" in rep:
        lines.append(f"Scott inequality: {rep['scott_inequality']}")
    return "\n".join(lines) + "\n"


def cmd_classify(args, parser) -> int:
    records = cl.classify(args.index)
    if args.format == "json":
        out = json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    elif args.format == "dot":
        out = "".join(to_dot(graph_of(r.fan, r.r), name=f"X{i}") for i, r in enumerate(records, 1))
    else:
        out = render_table(records)
    sys.stdout.write(out)
    return 0


def cmd_analyze(args, parser) -> int:
    if args.format == "dot":
        parser.error("--format dot is only available for graph and classify")
    gens = _parse_fan_arg(parser, args.generators)
    try:
        fan = build_fan(gens)
    except (FanError, LatticeError) as exc:
        print(f"invalid fan: {exc}", file=sys.stderr)
        return 1
    rep = analyze_fan(fan)
    sys.stdout.write(json.dumps(rep, indent=2) + "\n" if args.format == "json" else _analysis_text(rep))
    return 0


def cmd_cone(args, parser) -> int:
    if args.format == "dot":
        parser.error("--format dot is only available for graph and classify")
    try:
        c = cone_params((args.p, args.q))
    except LatticeError as exc:
        print(f"invalid cone: {exc}", file=sys.stderr)
        return 1
    summary = cl.cone_summary(c)
    if args.format == "json":
        sys.stdout.write(json.dumps(summary) + "\n")
    else:
        for k, v in summary.items():
            print(f"{k}: {v}")
    return 0


def cmd_graph(args, parser) -> int:
    gens = _parse_fan_arg(parser, args.generators)
    try:
        fan = build_fan(gens)
    except (FanError, LatticeError) as exc:
        print(f"invalid fan: {exc}", file=sys.stderr)
        return 1
    g = graph_of(fan)
    if args.format == "json":
        d = g.to_dict()
        d["key"] = list(canonical_key(g))
        sys.stdout.write(json.dumps(d) + "\n")
    elif args.format == "table":
        print("vertex weights:", " ".join(map(str, g.vertex_weights)))
        print("edge weights:", " ".join(_fmt_vec(e) for e in g.edge_weights))
    else:
        sys.stdout.write(to_dot(g))
    return 0


def cmd_oracle(args, parser) -> int:
    if args.format == "dot":
        parser.error("--format dot is only available for graph and classify")
    try:
        comp = compare_with_classifier(args.index, args.box)
    except OracleError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        res = oracle_classify(args.index, args.box)
        out = {
            "index": args.index,
            "box": args.box,
            "match": comp.match,
            "oracle_count": comp.oracle_count,
            "classifier_count": comp.classifier_count,
            "representatives": [list(map(list, g)) for g in res.representatives.values()],
            "only_in_oracle": [list(k) for k in comp.missing],
            "only_in_classifier": [list(k) for k in comp.extra],
        }
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        print(comp.report())
    return 0 if comp.match else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-ldp",
        description="Toric log Del Pezzo surfaces of Picard number one and index at most 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ["table", "json", "dot"]

    p = sub.add_parser("classify", help="list the isomorphism classes of a given index")
    p.add_argument("--index", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", help="invariants of the fan with the given generators")
    p.add_argument("generators", help='anticlockwise generators, e.g. "1,0;2,3;-1,-1"')
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cone", help="invariants of a (p,q)-cone")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("graph", help="weighted circular graph of a fan")
    p.add_argument("generators")
    p.add_argument("--format", choices=formats, default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("oracle", help="compare a brute-force box search with the classifier")
    p.add_argument("--index", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
