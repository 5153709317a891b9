"""Command-line interface: ``mec2 <subcommand> ...``.

Exit status is 0 on success, 1 for a "no" answer (decision, deletion, or an
invalid colouring in ``check``) and 2 for bad input; in the last case one JSON
object describing the error is written to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from pathlib import Path

from . import formats
from .branchdp import solve_branchdp
from .cyclespace import feedback_edge_set, logedge_bound, solve_cyclespace
from .decomposition import heuristic_branch_decomposition, treedecomp_to_branchdecomp
from .deletion import (
    minimum_edge_deletion,
    minimum_vertex_deletion,
    solve_edge_deletion,
    solve_vertex_deletion,
)
from .dense import CYCLESPACE_THRESHOLD, decide_nu2_at_least, dispatch, solve_dense
from .errors import FormatError, Mec2Error
from .generators import gen_named, random_cubic, random_forest, random_gnm, random_graph
from .graph import Graph, coloring_violation
from .oracle import solve_brute
from .solution import Solution

ENGINES = ("auto", "brute", "cyclespace", "branchdp", "dense", "logedge")


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    raw = os.environ.get("MEC2_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise Mec2Error(f"MEC2_THREADS must be an integer, got {raw!r}") from None


def _branch_decomposition(g: Graph, bd_path, td_path):
    if bd_path:
        bd = formats.parse_bd(formats.read_text(bd_path))
        bd.validate(g)
        return bd
    if td_path:
        td = formats.parse_td(formats.read_text(td_path))
        return treedecomp_to_branchdecomp(td, g)
    return heuristic_branch_decomposition(g) if g.m else None


def run_engine(g: Graph, engine: str, *, threads: int = 1, bd_path=None, td_path=None) -> Solution:
    """Run one named engine; explicit engines skip the dispatcher's guards."""
    if engine == "auto":
        return dispatch(g, threads=threads)
    if engine == "brute":
        return solve_brute(g)
    if engine in ("cyclespace", "logedge"):
        k = feedback_edge_set(g).dimension
        if engine == "cyclespace" and k > CYCLESPACE_THRESHOLD:
            _warn(f"|F| = {k} exceeds the dispatch threshold {CYCLESPACE_THRESHOLD}; running anyway")
        if engine == "logedge" and (g.m > logedge_bound(g) or len(g.components()) > 1):
            _warn("graph is outside the m <= n + log2(n) connected case; running the guess enumeration anyway")
        return solve_cyclespace(g, max_feedback=max(k, 0), threads=threads, engine=engine)
    if engine == "branchdp":
        return solve_branchdp(g, _branch_decomposition(g, bd_path, td_path))
    if engine == "dense":
        if g.n >= 3 and 2 * g.min_degree() < g.n:
            _warn("minimum degree is below n/2; the dense engine falls back to brute force")
        return solve_dense(g, max_edges=g.m)
    raise Mec2Error(f"unknown engine {engine!r}")


# -- subcommands -----------------------------------------------------------


def cmd_solve(args) -> int:
    g, inst = formats.load_graph(formats.read_text(args.graph))
    if (args.bd or args.td) and args.engine != "branchdp":
        _warn("--bd/--td are only used by the branchdp engine")
    t0 = time.perf_counter()
    sol = run_engine(g, args.engine, threads=_threads(args), bd_path=args.bd, td_path=args.td)
    millis = (time.perf_counter() - t0) * 1000
    if args.out:
        formats.write_text(args.out, formats.emit_coloring(sol.coloring))
    report = formats.sw_report(sol.value) if inst is not None else None
    if args.json:
        out = {"value": sol.value, "engine": sol.engine, "millis": round(millis, 3)}
        if args.out:
            out["coloring_path"] = str(args.out)
        if report is not None:
            out["tasks_executed"] = report.tasks_executed
            out["social_welfare"] = report.social_welfare
        print(json.dumps(out))
        return 0
    print(f"value {sol.value}")
    print(f"engine {sol.engine}")
    print(f"millis {millis:.3f}")
    if report is not None:
        print(f"tasks_executed {report.tasks_executed}")
        print(f"social_welfare {report.social_welfare}")
    if not args.out:
        sys.stdout.write(formats.emit_coloring(sol.coloring))
    return 0


def cmd_decide(args) -> int:
    g, _ = formats.load_graph(formats.read_text(args.graph))
    ok = decide_nu2_at_least(g, args.t)
    print("yes" if ok else "no")
    return 0 if ok else 1


def _cmd_delete(args, solve, minimise) -> int:
    g, _ = formats.load_graph(formats.read_text(args.graph))
    if args.k is None and not args.minimize:
        raise Mec2Error("give --k or --minimize")
    if args.k is not None and args.k < 0:
        raise Mec2Error("--k must be non-negative")
    if args.minimize:
        cert = minimise(g)
        if args.k is not None and len(cert.removed) > args.k:
            cert = None
    else:
        cert = solve(g, args.k)
    if cert is None:
        print("no")
        return 1
    text = formats.emit_certificate(cert.removed, cert.witness)
    print(f"yes {len(cert.removed)}")
    if args.out:
        formats.write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_delete_edges(args) -> int:
    return _cmd_delete(args, solve_edge_deletion, minimum_edge_deletion)


def cmd_delete_vertices(args) -> int:
    return _cmd_delete(args, solve_vertex_deletion, minimum_vertex_deletion)


def cmd_check(args) -> int:
    g, _ = formats.load_graph(formats.read_text(args.graph))
    text = formats.read_text(args.coloring)
    if any(line.strip().startswith("X:") for line in text.splitlines()):
        _, col = formats.parse_certificate(text, g.m)
    else:
        col = formats.parse_coloring(text, g.m)
    bad = coloring_violation(g, col)
    if bad is None:
        print(f"valid value {col.value()}")
        return 0
    print(f"invalid: {bad}")
    return 1


def cmd_gen(args) -> int:
    name = args.name
    if name in ("random", "gnp"):
        g = random_graph(_need(args.n, "--n"), args.p, args.seed)
    elif name == "gnm":
        g = random_gnm(_need(args.n, "--n"), _need(args.m, "--m"), args.seed)
    elif name == "cubic":
        g = random_cubic(_need(args.n, "--n"), args.seed)
    elif name == "forest":
        g = random_forest(_need(args.n, "--n"), args.seed)
    else:
        g = gen_named(name, args.n)
    formats.write_text(args.out or "-", formats.emit_graph(g))
    return 0


def _need(value, flag):
    if value is None:
        raise Mec2Error(f"{flag} is required for this generator")
    return value


BENCH_FIELDS = ["instance", "n", "m", "engine", "value", "millis", "param", "ops"]


def bench_rows(paths, engines, threads: int = 1):
    """One row per (instance, engine); ``param`` is |F| or the width, ``ops`` the work count."""
    for path in paths:
        g, _ = formats.load_graph(Path(path).read_text())
        for engine in engines:
            t0 = time.perf_counter()
            sol = run_engine(g, engine, threads=threads)
            millis = (time.perf_counter() - t0) * 1000
            st = sol.stats
            if engine in ("cyclespace", "logedge"):
                param, ops = st["feedback"], st["guesses"]
            elif engine == "branchdp":
                param, ops = st.get("width", 0), sum(st.get("table_sizes", {}).values())
            else:
                param, ops = "", ""
            yield {
                "instance": Path(path).name,
                "n": g.n,
                "m": g.m,
                "engine": engine,
                "value": sol.value,
                "millis": f"{millis:.3f}",
                "param": param,
                "ops": ops,
            }


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise Mec2Error(f"{corpus} is not a directory")
    paths = sorted(p for p in corpus.iterdir() if p.is_file() and not p.name.startswith("."))
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in ENGINES:
            raise Mec2Error(f"unknown engine {e!r}")
    sink = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(sink, fieldnames=BENCH_FIELDS, lineterminator="\n")
        w.writeheader()
        for row in bench_rows(paths, engines, _threads(args)):
            w.writerow(row)
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mec2", description="Maximum 2-edge-colourable subgraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute nu_2 and an optimal colouring")
    s.add_argument("graph", help="graph or task file, '-' for stdin")
    s.add_argument("--engine", choices=ENGINES, default="auto")
    s.add_argument("--bd", help="branch decomposition file (branchdp)")
    s.add_argument("--td", help="tree decomposition file, converted for branchdp")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out", help="write the colouring here instead of stdout")
    s.add_argument("--threads", type=int, default=None)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decide", help="is nu_2 >= t?")
    s.add_argument("graph")
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_decide)

    for name, func, what in (
        ("delete-edges", cmd_delete_edges, "edges"),
        ("delete-vertices", cmd_delete_vertices, "vertices"),
    ):
        s = sub.add_parser(name, help=f"delete at most k {what} to reach 2-edge-colourability")
        s.add_argument("graph")
        s.add_argument("--k", type=int, default=None)
        s.add_argument("--minimize", action="store_true", help="search for the smallest budget")
        s.add_argument("--out")
        s.set_defaults(func=func)

    s = sub.add_parser("check", help="validate a colouring or deletion certificate")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("name", help="petersen, k4, k5, k33, cycle, path, star, complete, empty, "
                   "'cycle(5)', random, gnm, cubic, forest")
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--m", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time engines on every file of a corpus directory")
    s.add_argument("corpus")
    s.add_argument("--engines", default="auto")
    s.add_argument("--out")
    s.add_argument("--threads", type=int, default=None)
    s.set_defaults(func=cmd_bench)
    return p


def _error_line(exc: BaseException) -> str:
    rec = {"error": type(exc).__name__, "message": getattr(exc, "reason", str(exc))}
    if isinstance(exc, FormatError) and exc.lineno is not None:
        rec["line"] = exc.lineno
    return json.dumps(rec)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Mec2Error, OSError) as exc:
        print(_error_line(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
