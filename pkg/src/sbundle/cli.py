"""Command-line entry point: ``sbundle solve | verify | bench``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .connectivity import bundle_certificate
from .graph import InvalidInputError
from .io import ResultRecord, read_graph, write_results
from .search import LB_CHOICES, SolverConfig, solve

log = logging.getLogger("sbundle")

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_TIMEOUT = 124

VARIANTS = {
    "default": {},
    "nopre": {"preprocess": False},
    "greedy": {"lb_mode": "greedy"},
    "color": {"bound_mode": "color"},
    "noexpand": {"expand_components": False},
    "nopair": {"pair_rule": False},
}
DEFAULT_S_LIST = "2,3,4,5,6,8,10,15"
GRAPH_SUFFIXES = {".clq", ".col", ".dimacs", ".txt", ".edges", ".el", ".mtx"}


def _setup_logging() -> None:
    level = os.environ.get("SBUNDLE_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def sig3(x: float) -> str:
    """Three significant figures."""
    return f"{x:.3g}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        v = 0.0
    if not v > 0:
        raise argparse.ArgumentTypeError("must be a positive number")
    return v


def _record(instance: str, g, config: SolverConfig, variant: str) -> ResultRecord:
    r = solve(g, config)
    return ResultRecord(
        instance=instance,
        s=config.s,
        size=r.best_size,
        witness=tuple(g.label(v) for v in r.witness),
        reduced_v=r.reduced_v,
        reduced_e=r.reduced_e,
        tree_nodes=r.tree_nodes,
        time=r.elapsed,
        timed_out=r.timed_out,
        variant=variant,
    )


def cmd_solve(args) -> int:
    try:
        g = read_graph(args.graph)
        config = SolverConfig(
            s=args.s, time_limit=args.time_limit, lb_mode=args.lb, bound_mode=args.bound,
            preprocess=not args.no_preprocess, expand_components=not args.no_expand,
            pair_rule=not args.no_pair_rule,
        )
    except (OSError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rec = _record(Path(args.graph).stem, g, config, "cli")
    if not args.quiet:
        status = "timeout (best found)" if rec.timed_out else "optimal"
        print(f"size: {rec.size} ({status})")
        print("witness:", " ".join(map(str, rec.witness)))
        print(f"tree nodes: {rec.tree_nodes}")
        print(f"reduced graph: {rec.reduced_v} vertices, {rec.reduced_e} edges")
        print(f"elapsed: {sig3(rec.time)} s")
    if args.json:
        write_results([rec], "json", args.json)
    return EXIT_TIMEOUT if rec.timed_out else EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = read_graph(args.graph)
        if args.s < 1:
            raise InvalidInputError("s must be a positive integer")
        wanted = _int_list(args.vertices)
    except (OSError, InvalidInputError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    index = {g.label(v): v for v in range(g.n)}
    unknown = [x for x in wanted if x not in index]
    if unknown:
        print(f"error: unknown vertex id(s): {', '.join(map(str, unknown))}", file=sys.stderr)
        return EXIT_INPUT
    verts = sorted({index[x] for x in wanted})
    cert = bundle_certificate(g, verts, args.s)
    if cert is None:
        print(f"FEASIBLE: {len(verts)} vertices form a {args.s}-bundle")
        return EXIT_OK
    print(f"INFEASIBLE: {cert.describe(g.label)}")
    return EXIT_INFEASIBLE


def _bench_one(task) -> ResultRecord:
    path, s, variant, time_limit = task
    name = Path(path).stem
    try:
        g = read_graph(path)
        config = replace(SolverConfig(s=s, time_limit=time_limit), **VARIANTS[variant])
        return _record(name, g, config, variant)
    except Exception as exc:  # recorded, the sweep goes on
        log.error("%s s=%d %s failed: %s", name, s, variant, exc)
        return ResultRecord(name, s, -1, (), 0, 0, 0, 0.0, True, variant)


def _graph_files(directory: Path) -> list[Path]:
    return sorted(p for p in directory.iterdir()
                  if p.is_file() and (p.suffix.lower() in GRAPH_SUFFIXES or not p.suffix))


def cmd_bench(args) -> int:
    directory = Path(args.dir)
    try:
        files = _graph_files(directory)
        s_list = _int_list(args.s_list)
        variants = [v.strip() for v in args.variants.split(",") if v.strip()]
    except (OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    bad = [v for v in variants if v not in VARIANTS]
    if bad or not variants or not s_list or min(s_list) < 1:
        print(f"error: bad --variants or --s-list (known variants: {', '.join(VARIANTS)})", file=sys.stderr)
        return EXIT_INPUT
    tasks = [(str(f), s, v, args.time_limit) for v in variants for s in s_list for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_bench_one, tasks))
    else:
        records = [_bench_one(t) for t in tasks]

    if args.out:
        write_results(records, "json" if str(args.out).endswith(".json") else "csv", args.out)
    for r in records:
        status = "timeout" if r.timed_out else "opt"
        print(f"{r.instance:<24} s={r.s:<3} {r.variant:<9} size={r.size:<4} "
              f"V'={r.reduced_v:<6} E'={r.reduced_e:<8} nodes={r.tree_nodes:<9} "
              f"time={sig3(r.time)} {status}")
    solved = defaultdict(int)
    for r in records:
        if not r.timed_out:
            solved[r.variant, r.s] += 1
    for v in variants:
        if len(variants) > 1:
            print(f"[{v}]")
        for s in s_list:
            print(f"s={s}: {solved[v, s]} solved")
        print(f"total: {sum(solved[v, s] for s in s_list)} of {len(files) * len(s_list)} solved")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sbundle", description="Exact maximum s-bundle solver.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one instance")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--s", type=_positive_int, required=True)
    sp.add_argument("--time-limit", type=_positive_float, default=3600.0)
    sp.add_argument("--lb", choices=LB_CHOICES, default="randwalk")
    sp.add_argument("--bound", choices=("pub", "color"), default="pub")
    sp.add_argument("--no-preprocess", action="store_true")
    sp.add_argument("--no-expand", action="store_true", help="grow partition sets without the independent-set seed")
    sp.add_argument("--no-pair-rule", action="store_true", help="disable the common-neighbour candidate rule")
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--quiet", action="store_true")
    sp.set_defaults(func=cmd_solve)

    vp = sub.add_parser("verify", help="check whether given vertices form an s-bundle")
    vp.add_argument("--graph", required=True)
    vp.add_argument("--s", type=int, required=True)
    vp.add_argument("--vertices", required=True, help="comma-separated ids as in the file")
    vp.set_defaults(func=cmd_verify)

    bp = sub.add_parser("bench", help="sweep a directory of instances")
    bp.add_argument("--dir", required=True)
    bp.add_argument("--s-list", default=DEFAULT_S_LIST)
    bp.add_argument("--time-limit", type=_positive_float, default=3600.0)
    bp.add_argument("--variants", default="default")
    bp.add_argument("--jobs", type=_positive_int, default=1)
    bp.add_argument("--out", metavar="PATH")
    bp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
