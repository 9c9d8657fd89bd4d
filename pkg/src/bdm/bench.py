"""Random large instances and wall-clock timing of the decomposition."""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import dataclass

from bdm import kernels
from bdm.decomposition import decompose
from bdm.graph import BipartiteGraph, build_graph
from bdm.matching import max_b_matching


def random_sparse_graph(m: int, seed: int = 0, avg_degree: int = 4) -> BipartiteGraph:
    """About ``m`` distinct edges on ``m // avg_degree`` vertices per side, capacities in 0..3."""
    rng = random.Random(seed)
    if m <= 0:
        return build_graph(0, 0, [])
    side = max(1, m // avg_degree)
    m = min(m, side * side)
    seen = set()
    while len(seen) < m:
        seen.add((rng.randrange(side), rng.randrange(side)))
    edges = sorted(seen)
    # mostly positive capacities, a few inactive vertices
    cap = rng.choices((0, 1, 2, 3), weights=(1, 10, 6, 3), k=2 * side)
    return build_graph(side, side, edges, cap)


@dataclass
class Timing:
    edges: int
    vertices: int
    components: int
    solve_seconds: float
    decompose_seconds: float
    backend: str


def time_decompose(m: int, seed: int = 0, repeat: int = 3, backend: str | None = None) -> Timing:
    """Best-of-``repeat`` wall time of :func:`decompose`, the solver excluded."""
    previous = kernels.use_backend(backend) if backend else None
    try:
        g = random_sparse_graph(m, seed)
        t0 = time.perf_counter()
        mt = max_b_matching(g)
        solve = time.perf_counter() - t0
        best = float("inf")
        d = None
        for _ in range(max(1, repeat)):
            gc.collect()
            # collector off while timing, as timeit does
            gc.disable()
            try:
                t0 = time.perf_counter()
                d = decompose(g, mt)
                best = min(best, time.perf_counter() - t0)
            finally:
                gc.enable()
        return Timing(g.m, g.n, d.k, solve, best, kernels.BACKEND)
    finally:
        if previous:
            kernels.use_backend(previous)


@dataclass
class Scaling:
    sizes: tuple[int, ...]
    seconds: dict[int, float]
    ratios: list[float]
    trial_ratios: list[list[float]]


def measure_scaling(
    sizes=(20_000, 40_000, 80_000),
    seeds: int = 3,
    repeat: int = 7,
    trials: int = 5,
) -> Scaling:
    """Per-doubling time ratios of :func:`decompose` on random sparse graphs.

    Within a trial the sizes are timed round-robin so a transient slowdown
    hits all of them alike; each graph keeps its best time and a size takes
    the median over seeds. The reported ratio is the median over trials.
    """
    cases = []
    for m in sizes:
        for seed in range(seeds):
            g = random_sparse_graph(m, seed)
            cases.append((m, g, max_b_matching(g)))
    trial_ratios = []
    per_trial_seconds = []
    for _ in range(trials):
        best = [float("inf")] * len(cases)
        gc.collect()
        gc.disable()
        try:
            for _ in range(repeat):
                for i, (_, g, mt) in enumerate(cases):
                    t0 = time.perf_counter()
                    decompose(g, mt)
                    best[i] = min(best[i], time.perf_counter() - t0)
        finally:
            gc.enable()
        secs = {
            m: statistics.median(b for (mm, _, _), b in zip(cases, best) if mm == m) for m in sizes
        }
        per_trial_seconds.append(secs)
        trial_ratios.append([secs[b] / secs[a] for a, b in zip(sizes, sizes[1:])])
    ratios = [statistics.median(r[i] for r in trial_ratios) for i in range(len(sizes) - 1)]
    seconds = {m: statistics.median(s[m] for s in per_trial_seconds) for m in sizes}
    return Scaling(tuple(sizes), seconds, ratios, trial_ratios)
