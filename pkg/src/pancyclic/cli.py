"""Command-line surface.

Machine-readable JSON goes to stdout (or --out); human diagnostics go to
stderr.  Exit codes: 0 success, 1 verification/precondition failure, 2 usage
error, 3 budget or cap exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    AnalysisParams,
    Digraph,
    Graph,
    OrderedPath,
    format_edge_list,
    load_graph,
)
from .covers import bfs_cluster_partition, gallai_milgram_cover
from .dense import find_dense_pair
from .errors import (
    BudgetExceeded,
    CapExceeded,
    PancyclicError,
    PreconditionFailed,
)
from .generators import GeneratorConfig, gen_extremal, gen_random_bounded_alpha
from .oracles import cycle_spectrum
from .report import SpectrumReport
from .shortening import easy_jump, find_special_sequence, jump_with_zigzag
from .spectrum import (
    cycle_n_minus_1,
    full_certificate,
    partition_into_matching_cycle,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _vertex_list(raw: str) -> tuple[int, ...]:
    return tuple(int(x) for x in raw.split(",") if x.strip() != "")


def _path_json(p: OrderedPath) -> dict:
    return {"vertices": list(p.vertices), "length": p.length}


def _orient(g: Graph, mode: str) -> Digraph:
    if mode == "low-high":
        return Digraph(g.n, g.edges())
    return Digraph(g.n, ((v, u) for u, v in g.edges()))


def _cmd_gen(args) -> int:
    if args.kind == "extremal":
        g = gen_extremal(args.k)
        comment = f"extremal construction k={args.k}"
    else:
        inst = gen_random_bounded_alpha(
            GeneratorConfig(n=args.n, k=args.k, seed=args.seed)
        )
        g = inst.graph
        comment = (
            f"random Hamiltonian graph n={args.n} k={args.k} seed={args.seed} "
            f"verified alpha={inst.alpha}"
        )
        print(f"verified alpha = {inst.alpha}", file=sys.stderr)
    text = format_edge_list(g, comment)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = load_graph(args.infile)
    if args.mode == "full":
        params = AnalysisParams(k=args.k, eps=args.eps)
        report = full_certificate(g, params)
    else:
        report = cycle_spectrum(g)
    if args.plot_data:
        _write_plot_data(report, args.plot_data)
    if args.json:
        _emit(report.to_json_dict(), args.out)
    else:
        present = sorted(report.present_set())
        absent = sorted(report.absent_set())
        unknown = sorted(report.unknown_set())
        print(f"n = {report.n}")
        print(f"present: {present}")
        print(f"absent: {absent}")
        print(f"unknown: {unknown}")
        verdict = report.is_pancyclic_verdict()
        print(f"pancyclic: {'undecided' if verdict is None else verdict}")
    if report.flags:
        for flag in report.flags:
            print(f"flag: {flag}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def _write_plot_data(report: SpectrumReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("length,status\n")
        for ell in range(3, report.n + 1):
            fh.write(f"{ell},{report.status_of(ell)}\n")


def _cmd_report(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        report = SpectrumReport.from_json(fh.read())
    if args.plot_data:
        _write_plot_data(report, args.plot_data)
        print(f"wrote {args.plot_data}", file=sys.stderr)
    else:
        _emit(report.to_json_dict(), args.out)
    return EXIT_OK


def _cmd_lemma(args) -> int:
    g = load_graph(args.infile)
    name = args.which
    if name == "path-cover":
        cover = gallai_milgram_cover(_orient(g, args.orient))
        _emit(
            {
                "size": cover.size,
                "paths": [list(p.vertices) for p in cover.paths],
            },
            args.out,
        )
    elif name == "bfs-partition":
        cp = bfs_cluster_partition(g, args.gamma)
        _emit(
            {
                "gamma": cp.gamma,
                "distance_bound": cp.dist_bound,
                "clusters": [
                    {"center": cl.center, "members": list(cl.members)}
                    for cl in cp.clusters
                ],
                "leftover": sorted(cp.leftover),
            },
            args.out,
        )
    elif name == "dense-pair":
        cert = find_dense_pair(g, AnalysisParams(k=args.k, gamma=args.gamma))
        _emit(
            {
                "u": cert.u,
                "v": cert.v,
                "interval": list(cert.achieved_interval),
                "paths": {str(ell): list(p.vertices) for ell, p in cert.paths.items()},
            },
            args.out,
        )
    elif name == "easy-jump":
        out = easy_jump(g, OrderedPath(_vertex_list(args.path)), args.k)
        _emit(_path_json(out), args.out)
    elif name == "special-seq":
        host = _vertex_list(args.host)
        excluded = frozenset(_vertex_list(args.excluded)) if args.excluded else frozenset()
        seq = find_special_sequence(g, host, excluded, args.k)
        _emit(
            {
                "positions": list(seq.positions),
                "skip_edges": [list(e) for e in seq.edges],
                "vertices": [seq.host[i] for i in seq.positions],
            },
            args.out,
        )
    elif name == "zigzag":
        pinned = frozenset(_vertex_list(args.pinned)) if args.pinned else frozenset()
        out = jump_with_zigzag(
            g, OrderedPath(_vertex_list(args.path)), args.c, pinned, args.k
        )
        _emit(_path_json(out), args.out)
    elif name == "matching-cycle":
        dec = partition_into_matching_cycle(g, args.k, args.eps)
        _emit(
            {
                "cycle": list(dec.cycle.vertices),
                "ejected": sorted(dec.s_set),
                "matching": {str(x): mx for x, mx in sorted(dec.matching.items())},
            },
            args.out,
        )
    elif name == "n-minus-1":
        w = cycle_n_minus_1(g, args.k)
        _emit({"length": w.length, "cycle": list(w.vertices)}, args.out)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancyclic",
        description=(
            "Cycle-spectrum certificates for Hamiltonian graphs with bounded "
            "independence number"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instance graphs")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    gen_ext = gen_sub.add_parser("extremal", help="chained-clique construction")
    gen_ext.add_argument("--k", type=int, required=True)
    gen_ext.add_argument("--out", default=None)
    gen_rand = gen_sub.add_parser("random", help="random bounded-alpha graph")
    gen_rand.add_argument("--n", type=int, required=True)
    gen_rand.add_argument("--k", type=int, required=True)
    gen_rand.add_argument("--seed", type=int, default=0)
    gen_rand.add_argument("--out", default=None)

    spec = sub.add_parser("spectrum", help="cycle-spectrum report for a graph")
    spec.add_argument("--in", dest="infile", required=True)
    spec.add_argument("--k", type=int, default=1)
    spec.add_argument("--eps", type=float, default=0.5)
    spec.add_argument("--mode", choices=["full", "oracle"], default="full")
    spec.add_argument("--json", action="store_true")
    spec.add_argument("--out", default=None)
    spec.add_argument("--plot-data", dest="plot_data", default=None,
                      help="write length,status CSV here")

    rep = sub.add_parser("report", help="re-emit or convert a saved report")
    rep.add_argument("--in", dest="infile", required=True)
    rep.add_argument("--out", default=None)
    rep.add_argument("--plot-data", dest="plot_data", default=None)

    lem = sub.add_parser("lemma", help="run one constructive step directly")
    lem.add_argument(
        "which",
        choices=[
            "path-cover",
            "bfs-partition",
            "dense-pair",
            "easy-jump",
            "special-seq",
            "zigzag",
            "matching-cycle",
            "n-minus-1",
        ],
    )
    lem.add_argument("--in", dest="infile", required=True)
    lem.add_argument("--k", type=int, default=1)
    lem.add_argument("--eps", type=float, default=0.5)
    lem.add_argument("--gamma", type=float, default=0.25)
    lem.add_argument("--c", type=int, default=1)
    lem.add_argument("--path", default="")
    lem.add_argument("--host", default="")
    lem.add_argument("--excluded", default="")
    lem.add_argument("--pinned", default="")
    lem.add_argument("--orient", choices=["low-high", "high-low"],
                     default="low-high")
    lem.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "spectrum":
            return _cmd_spectrum(args)
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "lemma":
            return _cmd_lemma(args)
        raise AssertionError(args.command)  # pragma: no cover
    except (CapExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionFailed as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        if exc.inequality:
            print(f"inequality: {exc.inequality}", file=sys.stderr)
        return EXIT_VERIFICATION
    except PancyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (OSError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
