"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad usage or input,
3 an internal invariant was violated.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from bdm import kernels
from bdm.errors import BdmError, InconsistentDecomposition, NotMaximumMatching, TooLarge
from bdm.oracle import MAX_EDGES, MAX_VERTICES, equivalence_check, random_instance
from bdm.pipeline import run_pipeline
from bdm.serialize import (
    DecompositionDocument,
    ParseError,
    graph_to_obj,
    names,
    parse_graph,
    to_dot,
)
from bdm.verifying import is_verifying, verifying_cost, verifying_to_ideal

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _read_graph(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_decompose(args) -> int:
    g = _read_graph(args.input)
    r = run_pipeline(g)
    doc = DecompositionDocument.from_result(r, reduce=args.reduce)
    sys.stdout.write(doc.to_json())
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(r, reduce=args.reduce))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args.input)
    r = run_pipeline(g)
    _emit(
        {
            "max_size": r.matching.size,
            "edge_classes": {g.edge_name(e): c.value for e, c in enumerate(r.classification.classes)},
            "D_set": names(g, r.d_set),
        }
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.cap <= 0:
        raise UsageError("--cap must be positive")
    g = _read_graph(args.input)
    r = run_pipeline(g, enumerate_cap=args.cap)
    _emit(
        {
            "count": len(r.verifying.sets),
            "truncated": r.verifying.truncated,
            "sets": [names(g, z) for z in r.verifying.sets],
        }
    )
    return EXIT_OK


def _parse_vertex_list(g, text: str) -> frozenset[int]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        return frozenset(g.vertex_by_name(s) for s in items)
    except BdmError as exc:
        raise UsageError(str(exc)) from exc


def cmd_check_verifying(args) -> int:
    g = _read_graph(args.input)
    z = _parse_vertex_list(g, args.set)
    r = run_pipeline(g)
    ok = is_verifying(g, z, r.matching)
    out = {
        "set": names(g, z),
        "cost": verifying_cost(g, z),
        "max_size": r.matching.size,
        "verifying": ok,
    }
    if ok:
        pair = verifying_to_ideal(r.decomposition, z)
        out["lower_ideal"] = sorted(pair.lower)
        out["upper_ideal"] = sorted(pair.upper)
    _emit(out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _check_one(item):
    seed, index, g = item
    try:
        div = equivalence_check(g)
    except TooLarge as exc:
        return seed, index, g, f"too large: {exc}"
    return seed, index, g, None if div is None else str(div)


def _random_params(args) -> tuple[tuple[int, ...], float]:
    try:
        caps = tuple(int(x) for x in args.caps.split(","))
    except ValueError:
        raise UsageError("--caps must be a comma-separated list of integers") from None
    if not caps or min(caps) < 0:
        raise UsageError("--caps must list non-negative integers")
    if args.random < 0:
        raise UsageError("--random must be non-negative")
    if not 1 <= args.max_side:
        raise UsageError("--max-side must be at least 1")
    if 2 * args.max_side > MAX_VERTICES or args.max_side**2 > MAX_EDGES:
        raise UsageError(
            f"--max-side {args.max_side} exceeds the oracle limits "
            f"({MAX_VERTICES} vertices, {MAX_EDGES} edges)"
        )
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    return caps, args.p


def cmd_check(args) -> int:
    if args.input is not None:
        if args.random is not None:
            raise UsageError("give either --input or --random, not both")
        g = _read_graph(args.input)
        if g.m > MAX_EDGES or g.n > MAX_VERTICES:
            raise UsageError(f"instance exceeds the oracle limits ({MAX_VERTICES} vertices, {MAX_EDGES} edges)")
        items = [(None, 0, g)]
    elif args.random is not None:
        caps, p = _random_params(args)
        rng = random.Random(args.seed)
        items = [(args.seed, i, random_instance(rng, args.max_side, caps, p)) for i in range(args.random)]
    else:
        raise UsageError("check needs --input FILE or --random N")

    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_one, items, chunksize=16))
    else:
        results = [_check_one(it) for it in items]

    failures = [r for r in results if r[3] is not None]
    for seed, index, g, detail in failures[:1]:
        where = "input" if seed is None else f"seed {seed}, instance {index}"
        print(f"DIVERGENCE ({where}): {detail}")
        print(json.dumps(graph_to_obj(g)))
    print(f"checked {len(results)} instance(s), {len(failures)} divergence(s)")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def _parse_size(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size {text!r}") from None
    if value < 0 or value != int(value):
        raise argparse.ArgumentTypeError(f"bad size {text!r}")
    return int(value)


def cmd_bench(args) -> int:
    from bdm.bench import time_decompose

    backend = None if args.backend == "auto" else args.backend
    if backend is not None and backend not in kernels.available_backends():
        raise UsageError(f"backend {backend!r} is not available")
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    print(f"{'edges':>9} {'vertices':>9} {'comps':>7} {'solve_s':>9} {'decompose_s':>12} {'ratio':>6}  backend")
    prev = None
    for m in args.sizes:
        t = time_decompose(m, seed=args.seed, repeat=args.repeat, backend=backend)
        ratio = f"{t.decompose_seconds / prev:>6.2f}" if prev else f"{'-':>6}"
        print(
            f"{t.edges:>9} {t.vertices:>9} {t.components:>7} "
            f"{t.solve_seconds:>9.4f} {t.decompose_seconds:>12.4f} {ratio}  {t.backend}"
        )
        prev = t.decompose_seconds if t.edges else None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bdm", description="b-matching Dulmage-Mendelsohn decomposition")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose a graph and print the JSON document")
    d.add_argument("input", help="graph JSON file, or - for stdin")
    d.add_argument("--dot", metavar="PATH", help="also write the component order as DOT")
    d.add_argument("--reduce", action="store_true", help="transitively reduce the order arcs")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("classify", help="print edge classes and the loose-attainable vertices")
    c.add_argument("input")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate-verifying", help="list verifying sets")
    e.add_argument("input")
    e.add_argument("--cap", type=int, default=10_000, help="stop after this many sets")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("check-verifying", help="test whether a vertex set is verifying")
    v.add_argument("input")
    v.add_argument("--set", required=True, help="comma-separated vertex names, e.g. a0,b1")
    v.set_defaults(func=cmd_check_verifying)

    k = sub.add_parser("check", help="compare the fast path with the brute-force oracle")
    k.add_argument("--input", help="graph JSON file")
    k.add_argument("--random", type=int, metavar="N", help="number of random instances")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--max-side", type=int, default=4)
    k.add_argument("--caps", default="0,1,2", help="capacity values to draw from")
    k.add_argument("--p", type=float, default=0.5, help="edge probability")
    k.add_argument("--jobs", type=int, default=1, help="worker processes")
    k.set_defaults(func=cmd_check)

    b = sub.add_parser("bench", help="time decompose on random sparse graphs")
    b.add_argument("--sizes", type=_parse_size, nargs="+", default=[20_000, 40_000, 80_000])
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--backend", default="auto", choices=["auto", "compiled", "python"])
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bdm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistentDecomposition, NotMaximumMatching) as exc:
        print(f"bdm: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
