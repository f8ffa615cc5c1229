"""inflata command line."""

from __future__ import annotations

import argparse
import os
import sys

from .closed_forms import FamilySpec, construct_family_ktds, cutedge_bounds, cutvertex_bounds, formula
from .decomposition import DECOMPOSITION_CAP, predict_gamma
from .domination import bounds
from .errors import CapacityError, InputError, UnsupportedError
from .harness import SUITES, canonical_json, run_suite, solve_report, witness_pairs
from .inflation import inflate
from .io import format_graph, format_vertex_map, read_graph, write_inflated

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_DISCREPANCY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # usage errors share the input-error exit code; 2 is reserved for capacity
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(args):
    if args.family:
        spec = FamilySpec.parse(args.family)
        return spec.graph(), spec.shorthand()
    return read_graph(args.graph), args.graph


def _emit(args, payload: dict, text: str):
    print(canonical_json(payload) if args.json else text)


def cmd_inflate(args) -> int:
    G, _ = _load(args)
    GI = inflate(G)
    if args.output:
        map_path = args.map or args.output + ".map"
        write_inflated(GI, args.output, map_path)
        if args.json:
            print(canonical_json({"n": GI.n, "m": len(GI.edges()), "graph": args.output,
                                  "map": map_path}))
        return EXIT_OK
    if args.json:
        print(canonical_json({
            "n": GI.n,
            "edges": [[u + 1, v + 1] for u, v in GI.edges()],
            "vertex_map": [[i + 1, j + 1] for i, j in GI.vertices],
        }))
        return EXIT_OK
    sys.stdout.write(format_graph(GI.n, GI.edges()))
    if args.map:
        with open(args.map, "w", encoding="utf-8") as fh:
            fh.write(format_vertex_map(GI))
    return EXIT_OK


def cmd_solve(args) -> int:
    G, label = _load(args)
    rep = solve_report(G, args.k, label, oracle=args.oracle, budget_nodes=args.budget_nodes,
                       time_limit=args.time_limit, cap=args.cap)
    payload = {"n": G.n, "m": G.m, **rep.to_dict()}
    if rep.gamma is None:
        text = f"budget exhausted: gamma in [{rep.interval[0]}, {rep.interval[1]}]"
    else:
        text = f"gamma = {rep.gamma} ({rep.method}, {rep.nodes} nodes)"
        if args.witness:
            text += "\nwitness: " + " ".join(f"{i}:{j}" for i, j in rep.witness)
    text += f"\nbounds: [{rep.bounds.best_lower}, {rep.bounds.best_upper}]"
    for d in rep.discrepancies:
        text += f"\ndiscrepancy: {d.claim}: expected {d.expected}, observed {d.observed}"
    _emit(args, payload, text)
    if rep.gamma is None:
        return EXIT_CAPACITY
    return EXIT_DISCREPANCY if rep.discrepancies else EXIT_OK


def cmd_bounds(args) -> int:
    G, _ = _load(args)
    rep = bounds(G, args.k)
    lines = [f"lower {v} ({s})" for v, s in rep.lower] + [f"upper {v} ({s})" for v, s in rep.upper]
    lines.append(f"interval [{rep.best_lower}, {rep.best_upper}]")
    _emit(args, {"n": G.n, "m": G.m, "k": args.k, **rep.to_dict(),
                 "best_lower": rep.best_lower, "best_upper": rep.best_upper}, "\n".join(lines))
    return EXIT_OK


def cmd_decompose(args) -> int:
    G, _ = _load(args)
    pred = predict_gamma(G, args.k, args.cap)
    cert = pred.certificate
    payload = {
        "kind": cert.kind if cert else None,
        "factors": [[[v + 1 for v in cyc] for cyc in f.cycles] for f in cert.factors] if cert else [],
        "matching": sorted([u + 1, v + 1] for u, v in cert.matching) if cert and cert.matching else None,
        "gamma_prediction": pred.to_dict(),
    }
    if cert:
        text = f"{cert.kind} certificate with {cert.r} two-factor(s)"
        for f in cert.factors:
            text += "\n  factor: " + " | ".join(" ".join(str(v + 1) for v in c) for c in f.cycles)
        if cert.matching:
            text += "\n  matching: " + " ".join(f"{u + 1}-{v + 1}" for u, v in sorted(cert.matching))
    else:
        text = "no certificate"
    pv = pred.value if pred.value is not None else list(pred.interval)
    text += f"\nprediction ({pred.basis}): {pv}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_formula(args) -> int:
    spec = FamilySpec.parse(args.family)
    value, basis, exact = formula(spec, args.k)
    payload = {"family": spec.shorthand(), "k": args.k, "value": value, "basis": basis,
               "exact": exact}
    if args.witness:
        payload["witness"] = witness_pairs(construct_family_ktds(spec, args.k))
    text = f"{value} ({basis}{'' if exact else ', upper bound or unverified'})"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_compose(args) -> int:
    if args.cut_edge:
        gG, gH = args.cut_edge
        b = cutedge_bounds(gG, gH, args.k, strict=args.strict)
    else:
        b = cutvertex_bounds(args.cut_vertex, args.k)
    _emit(args, {"lower": b.lower, "upper": b.upper, "basis": b.basis},
          f"[{b.lower}, {b.upper}] ({b.basis})")
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_suite(args.suite)
    bad = sum(len(r.discrepancies) for r in results)
    if args.json:
        print(canonical_json({"suites": [r.to_dict() for r in results], "discrepancies": bad}))
    else:
        for r in results:
            print(f"{r.suite}: {len(r.reports)} instances, {len(r.discrepancies)} discrepancies,"
                  f" {len(r.findings)} findings, {r.timing_ms} ms")
            for inp, k, d in r.discrepancies:
                print(f"  DISCREPANCY {inp} k={k}: {d.claim}: expected {d.expected},"
                      f" observed {d.observed}")
            if args.verbose:
                for inp, k, d in r.findings:
                    print(f"  finding {inp} k={k}: {d.claim}: expected {d.expected},"
                          f" observed {d.observed}")
    return EXIT_DISCREPANCY if bad else EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--budget-nodes", type=_positive,
                        default=os.environ.get("INFLATA_BUDGET_NODES"),
                        help="search node budget (env INFLATA_BUDGET_NODES)")
    common.add_argument("--time-limit", type=float, default=None, help="seconds")
    common.add_argument("--cap", type=_positive, default=DECOMPOSITION_CAP,
                        help="vertex cap for the decomposition search")

    def with_input(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="graph file ('p edge n m' / 'e u v')")
        src.add_argument("--family", help="kn:N, kpq:P,Q, multi:A,B,..., harary:M,N, gpg:N,M, cycle:N")

    parser = _Parser(prog="inflata", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("inflate", parents=[common], help="write the inflated graph")
    with_input(p)
    p.add_argument("-o", "--output", help="graph file to write (default: stdout)")
    p.add_argument("--map", help="vertex-map sidecar path (default: OUTPUT.map)")
    p.set_defaults(func=cmd_inflate)

    p = sub.add_parser("solve", parents=[common], help="exact value with bounds and prediction")
    with_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use exhaustive search")
    p.add_argument("--witness", action="store_true", help="print the witness in text mode")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", parents=[common], help="lower and upper bounds")
    with_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("decompose", parents=[common], help="search for a 2-factor certificate")
    with_input(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("formula", parents=[common], help="closed form for a family")
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="include the explicit set")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("compose", parents=[common], help="bounds from component values")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--cut-edge", type=int, nargs=2, metavar=("G", "H"))
    grp.add_argument("--cut-vertex", type=int, nargs="+", metavar="GAMMA")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="k below both minimum degrees")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", parents=[common], help="run a cross-check battery")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("-v", "--verbose", action="store_true", help="also list findings")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, UnsupportedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
