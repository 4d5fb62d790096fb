"""Command-line entry point: ``fixnum gen | analyze | fixedgraph | verify``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input
error, 3 a size cap refused the computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import families as fam
from .autgroup import automorphisms
from .errors import CapExceeded, GraphError, enumeration_cap
from .fixing import (
    active_and_core,
    active_pairs,
    edge_bound_check,
    f_min,
    fixed_graph,
    fixed_number,
    fixing_number,
    upper_fixing_number,
)
from .graph import Graph, read_graph, twin_partition, write_graph
from .lp import ILP_COLUMN_CAP, fmt_rational, fractional_fixing_number, fractional_metric_dimension
from .verify import FAIL, run, wheel_printed_formula

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _wheel_order(G: Graph):
    """``n`` if ``G`` is the wheel ``W_n`` (hub joined to a cycle of length >= 4)."""
    if G.n < 5:
        return None
    hubs = [v for v in range(G.n) if G.degree(v) == G.n - 1]
    for h in hubs:
        rim = [v for v in range(G.n) if v != h]
        R = G.induced(rim)
        if R.is_connected() and all(R.degree(v) == 2 for v in range(R.n)):
            return G.n
    return None


def analyze(G: Graph, upper: bool = False, fxd: bool = False, dimf: bool = False, cap=None) -> dict:
    """Collect every invariant of ``G`` into a JSON-ready report."""
    group = automorphisms(G)
    active, core = active_and_core(G)
    pairs = active_pairs(G)
    fix = fixing_number(G)
    ff = fractional_fixing_number(G)
    report = {
        "graph": {"name": G.name, "n": G.n, "m": G.m},
        "group_order": str(group.order),
        "orbits": [list(o) for o in group.orbits()],
        "active": sorted(active),
        "core": sorted(core),
        "twin_classes": [list(c) for c in twin_partition(G)],
        "active_pairs": len(pairs),
        "f": f_min(G) if pairs else None,
        "fix": fix.value,
        "fix_witness": list(fix.witness),
        "fix_f": fmt_rational(ff.value),
        "fix_f_weights": [fmt_rational(w) for w in ff.weights],
        "notes": [],
    }
    if G.n <= ILP_COLUMN_CAP:
        from .lp import CoverLp, integral_cover_optimum
        hit = integral_cover_optimum(CoverLp(G.n, fixed_graph(G).row_masks))[0]
        report["hitting_set"] = hit
        if hit != fix.value:
            report["notes"].append(f"0/1 cover of the fixed graph is {hit} but fix is {fix.value}")
    if upper:
        value, witness = upper_fixing_number(G, cap)
        report["fix_plus"] = value
        report["fix_plus_witness"] = list(witness)
    if fxd:
        report["fxd"] = fixed_number(G, cap)
    if dimf:
        if not G.is_connected():
            report["notes"].append("dim_f skipped: graph is disconnected")
        else:
            dm = fractional_metric_dimension(G)
            report["dim_f"] = fmt_rational(dm.value)
            report["dim_f_weights"] = [fmt_rational(w) for w in dm.weights]
            assert ff.value <= dm.value
    assert ff.value <= fix.value
    assert ff.value <= Fraction(G.n, 2)
    n = _wheel_order(G)
    if n is not None:
        printed = wheel_printed_formula(n)
        if printed != ff.value:
            report["notes"].append(
                f"wheel W{n}: LP value {fmt_rational(ff.value)} differs from the printed closed form "
                f"{fmt_rational(printed)}; the rim reduction gives (n-1)/f(C_(n-1))")
    return report


def _format_table(report: dict) -> str:
    lines = []
    width = max(len(k) for k in report)
    for key, value in report.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def _gen(args) -> int:
    name = args.family
    if name in fam.BINARY:
        if not (args.left and args.right):
            raise UsageError(f"{name} needs --left and --right graph files")
        G = fam.BINARY[name](read_graph(args.left), read_graph(args.right))
    elif name in fam.UNARY:
        if not args.left:
            raise UsageError(f"{name} needs --left graph file")
        G = fam.UNARY[name](read_graph(args.left))
    elif name in fam.FAMILIES:
        ctor, arity = fam.FAMILIES[name]
        if name == "random":
            if len(args.params) != 3:
                raise UsageError("random takes: n p seed")
            G = ctor(int(args.params[0]), float(args.params[1]), int(args.params[2]))
        else:
            try:
                params = [int(p) for p in args.params]
            except ValueError:
                raise UsageError(f"{name} takes integer parameters") from None
            if arity is not None and len(params) != arity:
                raise UsageError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
            G = ctor(*params)
    else:
        known = sorted(list(fam.FAMILIES) + list(fam.BINARY) + list(fam.UNARY))
        raise UsageError(f"unknown family {name!r}; known: {', '.join(known)}")
    if args.out:
        write_graph(G, args.out, "text" if args.text else "json")
        print(f"{G.name}: n={G.n} m={G.m} -> {args.out}")
    else:
        sys.stdout.write(G.to_edge_list_text() if args.text else G.to_json() + "\n")
    return EXIT_OK


def _analyze(args) -> int:
    G = read_graph(args.input)
    report = analyze(G, args.with_upper_fixing, args.with_fixed_number, args.with_dimf, args.cap)
    print(json.dumps(report) if args.json else _format_table(report))
    return EXIT_OK


def _fixedgraph(args) -> int:
    G = read_graph(args.input)
    fg = fixed_graph(G)
    if args.out:
        Path(args.out).write_text(fg.to_json() + "\n", encoding="utf-8")
        matrix_path = args.matrix or str(Path(args.out).with_suffix(".B.txt"))
        Path(matrix_path).write_text(fg.matrix_text(), encoding="utf-8")
    summary = {"pairs": len(fg.pairs), "edges": fg.edge_count}
    if fg.pairs and G.n <= enumeration_cap(args.cap):
        try:
            summary["edge_bounds"] = edge_bound_check(G, args.cap).to_dict()
        except GraphError as exc:
            summary["edge_bounds"] = str(exc)
    if args.json or not args.out:
        out = dict(summary)
        if not args.out:
            out.update(fg.to_dict())
        print(json.dumps(out))
    else:
        print(f"|E(I(G))| = {fg.edge_count} over {len(fg.pairs)} active pairs")
        if isinstance(summary.get("edge_bounds"), dict):
            b = summary["edge_bounds"]
            print(f"k-fixed with k={b['k']}, l={b['l']}: {b['lower']} <= {b['edges']} <= {b['upper']}")
    return EXIT_OK


def _verify(args) -> int:
    try:
        checks = run(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    failed = [c for c in checks if c.status == FAIL]
    if args.json:
        print(json.dumps({"checks": [c.to_dict() for c in checks], "failed": len(failed)}))
    else:
        for c in checks:
            print(f"[{c.status}] {c.item}: {c.label}" + (f"  ({c.detail})" if c.detail else ""))
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixnum", description="Exact fixing-number invariants of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--left", help="left operand graph file for products")
    p.add_argument("--right", help="right operand graph file for products")
    p.add_argument("-o", "--out")
    p.add_argument("--text", action="store_true", help="write the 'n m' edge-list format")
    p.set_defaults(func=_gen)

    p = sub.add_parser("analyze", help="report symmetry invariants of a graph file")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--with-upper-fixing", action="store_true")
    p.add_argument("--with-fixed-number", action="store_true")
    p.add_argument("--with-dimf", action="store_true")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=_analyze)

    p = sub.add_parser("fixedgraph", help="export the fixed graph and its covering matrix")
    p.add_argument("input")
    p.add_argument("-o", "--out")
    p.add_argument("--matrix", help="path for the dense matrix text (default: <out>.B.txt)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=_fixedgraph)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
