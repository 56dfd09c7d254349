"""stashpeel command line: peel, solve, reduce, lift, verify, generate.

Exit codes: 0 success, 1 infeasible (cap exceeded or a failed gadget
check), 2 input error.  All randomness is seed-controlled, so identical
invocations produce byte-identical output.  STASHPEEL_THREADS caps the
worker pool used for gadget grid verification.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import gadgets, reductions, stash_solvers
from .errors import CapExceededError, ParameterError, StashpeelError
from .hypergraph import Hypergraph, format_stash, parse, parse_stash, serialize
from .peeling import core_subgraph, k_core

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2


def gen_random(n_vertices: int, n_edges: int, d: int, seed: int) -> Hypergraph:
    """Seeded random d-uniform hypergraph: each edge picks d distinct
    vertices uniformly at random.

    The generator is CPython's ``random.Random`` (Mersenne Twister), with
    one ``sample(range(n_vertices), d)`` call per edge in order, so a seed
    pins the instance exactly.
    """
    if d < 2:
        raise ParameterError(f"edge arity must be at least 2, got {d}")
    if n_vertices < d:
        raise ParameterError(f"need at least d={d} vertices, got {n_vertices}")
    if n_edges < 0:
        raise ParameterError(f"edge count must be non-negative, got {n_edges}")
    rng = random.Random(seed)
    g = Hypergraph(d)
    g.add_vertices(n_vertices)
    for _ in range(n_edges):
        g.add_edge(rng.sample(range(n_vertices), d))
    return g


def _threads() -> int:
    raw = os.environ.get("STASHPEEL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ParameterError(f"STASHPEEL_THREADS must be an integer, got {raw!r}") from None


def _load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _print_stash_result(out, kind: str, ids, optimal: bool) -> None:
    out.write(format_stash(kind, ids))
    out.write(f"size={len(set(ids))} optimal={'true' if optimal else 'false'}\n")


def _cmd_peel(args, out) -> int:
    g = _load(args.file)
    trace = k_core(g, args.k)
    out.write(serialize(core_subgraph(g, trace)))
    out.write("# peeled: " + " ".join(str(v) for v in trace.peeled_vertices) + "\n")
    out.write("# core: " + " ".join(str(v) for v in sorted(trace.core_vertices)) + "\n")
    return EXIT_OK


def _cmd_stash_exact(args, out) -> int:
    g = _load(args.file)
    solver = (
        stash_solvers.min_vertex_stash_exact
        if args.mode == "vertex"
        else stash_solvers.min_edge_stash_exact
    )
    result = solver(g, args.k, args.cap)
    _print_stash_result(out, "v" if args.mode == "vertex" else "e", result.stash, True)
    return EXIT_OK


def _cmd_stash_greedy(args, out) -> int:
    g = _load(args.file)
    result = stash_solvers.greedy_stash(g, args.k, args.mode, args.tie_break, args.seed)
    _print_stash_result(out, "v" if args.mode == "vertex" else "e", result.stash, False)
    return EXIT_OK


def _cmd_stash_2edge(args, out) -> int:
    g = _load(args.file)
    cert = stash_solvers.two_edge_stash_standard(g)
    _print_stash_result(out, "e", cert.removed_edges, True)
    out.write(f"# h={cert.h} components={cert.components}\n")
    return EXIT_OK


def _cmd_cover(args, out) -> int:
    g = _load(args.file)
    cover = stash_solvers.min_vertex_cover_exact(g, args.cap)
    _print_stash_result(out, "v", cover, True)
    return EXIT_OK


def _cmd_reduce(args, out) -> int:
    g = _load(args.file)
    if args.source == "vc":
        reduced, rmap = reductions.reduce_vc_to_vertex_stash(g, args.k, args.d)
    else:
        reduced, rmap = reductions.reduce_vertex_to_edge_stash(g, args.k, args.d)
    out.write(serialize(reduced))
    map_path = args.map_out or args.file + ".map"
    with open(map_path, "w", encoding="utf-8") as fh:
        fh.write(reductions.serialize_map(rmap))
    out.write(f"# map: {map_path}\n")
    return EXIT_OK


def _cmd_lift(args, out) -> int:
    with open(args.map, "r", encoding="utf-8") as fh:
        rmap = reductions.parse_map(fh.read())
    with open(args.stash, "r", encoding="utf-8") as fh:
        kind, ids = parse_stash(fh.read())
    if rmap.direction == "vc_to_vs":
        if kind != "v":
            raise ParameterError("cover-reduction maps lift vertex stashes only")
        normalized = reductions.normalize_stash(rmap.reduced, rmap, ids)
        back = {img: v for v, img in rmap.vertex_map.items()}
        out.write(format_stash("v", (back[w] for w in normalized)))
        return EXIT_OK
    if kind == "e":
        lifted = reductions.lift_edge_stash(rmap.reduced, rmap, ids)
        out.write(format_stash("v", lifted))
    else:
        pushed = reductions.push_vertex_stash(rmap.original, rmap, ids)
        out.write(format_stash("e", pushed))
    return EXIT_OK


def _report_rows(report: gadgets.GadgetReport) -> list[str]:
    params = ",".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    return [
        f"{report.gadget}\t{params}\t{c.name}\t{'pass' if c.passed else 'FAIL'}\t{c.witness}"
        for c in report.checks
    ]


def _reports_for(k: int, d: int) -> list[gadgets.GadgetReport]:
    reports = []
    if k >= 2:
        reports.append(gadgets.check_ck_properties(gadgets.build_ck_gadget(k, d)))
    if k >= 3:
        for b in (2, 3):
            reports.append(gadgets.check_b_block(gadgets.build_b_block(b, k, d)))
        for m in range(1, k):
            reports.append(gadgets.check_stable_block(gadgets.build_simple_stable_block(m, k, d)))
        for m in gadgets.GRID_M:
            reports.append(gadgets.check_stable_block(gadgets.build_stable_block(m, k, d)))
    if k == 2 and d >= 3:
        for p in gadgets.GRID_P:
            reports.append(gadgets.check_stable_block(gadgets.build_tree_stable_block(p, d)))
    return reports


def _cmd_verify_gadgets(args, out) -> int:
    if args.grid:
        reports = gadgets.run_gadget_grid(max_workers=_threads())
    elif args.k is not None and args.d is not None:
        reports = _reports_for(args.k, args.d)
    else:
        raise ParameterError("verify-gadgets needs --grid or both --k and --d")
    out.write("gadget\tparams\tcheck\tpass\twitness\n")
    for report in reports:
        for row in _report_rows(report):
            out.write(row + "\n")
    return EXIT_OK if all(r.all_passed for r in reports) else EXIT_INFEASIBLE


def _cmd_gadget(args, out) -> int:
    if args.type == "ck":
        g = gadgets.build_ck_gadget(args.k, args.d)
    elif args.type in ("b2", "b3"):
        g = gadgets.build_b_block(int(args.type[1]), args.k, args.d)
    elif args.type == "simple-stable":
        g = gadgets.build_simple_stable_block(args.m, args.k, args.d)
    elif args.type == "stable":
        g = gadgets.build_stable_block(args.m, args.k, args.d)
    else:
        g = gadgets.build_tree_stable_block(args.p, args.d)
    out.write(serialize(g.graph))
    for port in g.ports:
        attach = ";".join(" ".join(str(v) for v in e) for e in port.edges)
        shared = " shared" if port.shared_external else ""
        out.write(f"# port {port.name} attach={attach}{shared}\n")
    out.write("# estar " + " ".join(str(e) for e in sorted(g.estar)) + "\n")
    return EXIT_OK


def _cmd_gen_random(args, out) -> int:
    out.write(serialize(gen_random(args.vertices, args.edges, args.d, args.seed)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stashpeel",
        description="k-core peeling, minimum stashes, and stash-hardness gadgets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("peel", help="print the k-core of an instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_peel)

    p = sub.add_parser("stash-exact", help="minimum vertex or edge stash")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "edge"), required=True)
    p.add_argument("--cap", type=int, default=stash_solvers.DEFAULT_SIZE_CAP)
    p.add_argument("file")
    p.set_defaults(func=_cmd_stash_exact)

    p = sub.add_parser("stash-greedy", help="heuristic stash")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "edge"), required=True)
    p.add_argument("--tie-break", choices=stash_solvers.TIE_BREAKS, default="max_degree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("file")
    p.set_defaults(func=_cmd_stash_greedy)

    p = sub.add_parser("stash-2edge", help="minimum 2-edge stash of a standard graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_stash_2edge)

    p = sub.add_parser("cover", help="minimum vertex cover of a standard graph")
    p.add_argument("--cap", type=int, default=stash_solvers.DEFAULT_SIZE_CAP)
    p.add_argument("file")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("reduce", help="translate an instance between problems")
    p.add_argument("--from", dest="source", choices=("vc", "vstash"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--map-out", default=None, help="sidecar map path (default FILE.map)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("lift", help="lift a stash certificate through a reduction map")
    p.add_argument("--map", required=True)
    p.add_argument("--stash", required=True)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("verify-gadgets", help="build and check gadget constructions")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--grid", action="store_true", help="run the full CI parameter grid")
    p.set_defaults(func=_cmd_verify_gadgets)

    p = sub.add_parser("gadget", help="emit one gadget in the standard text format")
    p.add_argument(
        "--type",
        choices=("ck", "b2", "b3", "simple-stable", "stable", "tree-stable"),
        required=True,
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--p", type=int, default=1)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("gen-random", help="seeded random d-uniform instance")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen_random)

    return parser


def run(argv: list[str], out=None, err=None) -> int:
    """Dispatch one invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CapExceededError as exc:
        err.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except StashpeelError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


def main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
