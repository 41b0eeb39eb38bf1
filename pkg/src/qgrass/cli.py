"""Command-line interface.

Exit codes: 0 on success, 1 when a verification suite reports violations
(diagnostics printed as JSON), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .builder import explore_exchange_graph, initial_seed
from .errors import QGrassError
from .rankone import kappa, lambda_pair
from .seeds import mutate_seed
from .subsets import as_subset, classify_noncrossing


def _subset(text: str) -> tuple[int, ...]:
    try:
        return as_subset(int(tok) for tok in text.split(",") if tok.strip())
    except (ValueError, QGrassError) as exc:
        raise argparse.ArgumentTypeError(f"bad subset {text!r}: {exc}")


def _path(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad path {text!r}: {exc}")


def _print_seed(seed, as_json: bool):
    if as_json:
        print(json.dumps(seed.to_json_dict(), indent=2))
        return
    print(f"Gr({seed.m},{seed.n}) seed, history {[k + 1 for k in seed.history]}")
    for idx, (label, frozen) in enumerate(zip(seed.labels, seed.frozen), start=1):
        tag = "frozen " if frozen else "mutable"
        name = "{" + ",".join(map(str, label)) + "}" if label else "(no label)"
        print(f"  {idx:2d} {tag} {name}")
    print("  B =", [list(r) for r in seed.B])
    print("  L =", [list(r) for r in seed.L])


def _cmd_seed(args) -> int:
    _print_seed(initial_seed(args.m, args.n), args.json)
    return 0


def _cmd_mutate(args) -> int:
    seed = initial_seed(args.m, args.n)
    for step in args.path:
        k = step - 1
        old_label = seed.labels[k] if 0 <= k < seed.n_positions else None
        seed = mutate_seed(seed, k)
        new_label = seed.labels[k]
        if new_label is not None:
            was = "{" + ",".join(map(str, old_label)) + "}" if old_label else "?"
            now = "{" + ",".join(map(str, new_label)) + "}"
            print(f"step {step}: geometric exchange {was} -> {now}")
        else:
            print(f"step {step}: mutation (variable is not a quantum minor)")
    _print_seed(seed, args.json)
    return 0


def _cmd_kappa(args) -> int:
    n = args.n
    kij = kappa(args.I, args.J, n)
    kji = kappa(args.J, args.I, n)
    print(f"kappa(I,J) = {kij}")
    print(f"kappa(J,I) = {kji}")
    print(f"lambda(I,J) = {lambda_pair(args.I, args.J, n)}")
    return 0


def _cmd_c(args) -> int:
    cls = classify_noncrossing(args.I, args.J)
    if cls.crossing:
        print("crossing")
        return 0
    if cls.case_i is not None:
        jp, jpp = cls.case_i
        print(f"case (i): J' = {list(jp)}, J'' = {list(jpp)}")
    if cls.case_ii is not None:
        ip, ipp = cls.case_ii
        print(f"case (ii): I' = {list(ip)}, I'' = {list(ipp)}")
    print(f"c(I,J) = {cls.c}")
    return 0


def _report_exit(report: dict) -> int:
    if report["violations"]:
        print(json.dumps(report, indent=2, default=str))
        return 1
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "lz":
        report = checks.verify_lz(args.m, args.n)
        print(f"{report['pairs']} pairs, {len(report['violations'])} violations")
        return _report_exit(report)
    if args.suite == "compat":
        report = checks.verify_mutation_consistency(
            args.m, args.n, paths=args.samples, depth=args.depth
        )
        print(
            f"{report['paths']} paths, {report['steps']} steps, "
            f"{len(report['violations'])} violations"
        )
        return _report_exit(report)
    report = checks.verify_plucker(args.m, args.n, depth=args.depth)
    print(
        f"{report['exchanges']} exchanges, {report['plucker_instances']} "
        f"relations, {len(report['violations'])} violations"
    )
    return _report_exit(report)


def _cmd_explore(args) -> int:
    summary = explore_exchange_graph(
        args.m,
        args.n,
        max_seeds=args.max_seeds,
        max_depth=args.max_depth,
        geometric_only=args.geometric_only,
    )
    print(json.dumps(summary.to_json_dict()))
    return 0


def _cmd_serve(args) -> int:
    from .service import run_service

    run_service(args.address, args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgrass",
        description="Quantum cluster structures on Grassmannians, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seed", help="print the rectangle seed of Gr(m,n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_seed)

    p = sub.add_parser("mutate", help="mutate the rectangle seed along a path")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--path", type=_path, required=True, help="1-based positions, comma separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("kappa", help="kappa and lambda invariants of a pair of labels")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--I", type=_subset, required=True)
    p.add_argument("--J", type=_subset, required=True)
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("c", help="crossing classification and c(I,J)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--I", type=_subset, required=True)
    p.add_argument("--J", type=_subset, required=True)
    p.set_defaults(func=_cmd_c)

    p = sub.add_parser("verify", help="run a verification suite")
    vs = p.add_subparsers(dest="suite", required=True)
    v = vs.add_parser("lz", help="quasi-commutation oracle vs combinatorics")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(func=_cmd_verify)
    v = vs.add_parser("compat", help="mutation consistency along random geometric paths")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--depth", type=int, default=6)
    v.add_argument("--samples", type=int, default=100)
    v.set_defaults(func=_cmd_verify)
    v = vs.add_parser("plucker", help="exchange relations are quantum Plücker relations")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--depth", type=int, default=3)
    v.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="breadth-first exchange graph exploration")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-seeds", type=int, default=None)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--geometric-only", action="store_true")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("serve", help="start the HTTP session service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--address", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QGrassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
