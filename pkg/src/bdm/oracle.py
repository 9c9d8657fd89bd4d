"""Exhaustive ground truth on small instances.

Everything here follows the definitions literally: maximum b-matchings are
found by trying every edge subset, edge classes by membership across all of
them, verifying sets by trying every vertex subset. Nothing is shared with
the fast path beyond the graph object itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from bdm.errors import TooLarge
from bdm.graph import BipartiteGraph, build_graph

MAX_EDGES = 16
MAX_VERTICES = 16

FORBIDDEN = "forbidden"
INEVITABLE = "inevitable"
FLEXIBLE = "flexible"


@dataclass
class OracleReport:
    max_size: int
    all_max_matchings: list[frozenset[int]]
    edge_class: tuple[str, ...]
    d_set: frozenset[int]
    components: list[tuple[frozenset[int], str]]
    verifying_sets: list[frozenset[int]]
    min_cost: int = 0
    # reflexive-transitive closure of the component relation, by vertex set
    order: frozenset[tuple[frozenset[int], frozenset[int]]] = field(default_factory=frozenset)

    @property
    def kinds(self) -> dict[frozenset[int], str]:
        return dict(self.components)


def _max_matchings(g: BipartiteGraph) -> tuple[int, list[int]]:
    m = g.m
    inc = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        inc[u] |= 1 << e
        inc[v] |= 1 << e
    checks = [(inc[v], g.cap[v]) for v in range(g.n) if inc[v].bit_count() > g.cap[v]]
    best = -1
    found: list[int] = []
    for mask in range(1 << m):
        size = mask.bit_count()
        if size < best:
            continue
        if any((mask & im).bit_count() > c for im, c in checks):
            continue
        if size > best:
            best = size
            found = [mask]
        else:
            found.append(mask)
    return best, found


def _components(n: int, pairs) -> list[frozenset[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def oracle_report(
    g: BipartiteGraph,
    max_edges: int = MAX_EDGES,
    max_vertices: int = MAX_VERTICES,
) -> OracleReport:
    if g.m > max_edges or g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices / {g.m} edges exceed oracle limits {max_vertices}/{max_edges}")
    n, n_a = g.n, g.n_a
    best, masks = _max_matchings(g)

    classes = []
    for e in range(g.m):
        hits = sum(1 for mk in masks if mk >> e & 1)
        classes.append(INEVITABLE if hits == len(masks) else FORBIDDEN if hits == 0 else FLEXIBLE)

    d_set = set()
    for mk in masks:
        load = [0] * n
        for e, (u, v) in enumerate(g.edges):
            if mk >> e & 1:
                load[u] += 1
                load[v] += 1
        d_set.update(v for v in range(n) if load[v] < g.cap[v])

    flex_pairs = [g.edges[e] for e in range(g.m) if classes[e] == FLEXIBLE]
    comps = _components(n, flex_pairs)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    labelled = []
    for c in comps:
        hit_a = any(v in d_set and v < n_a for v in c)
        hit_b = any(v in d_set and v >= n_a for v in c)
        if hit_a and hit_b:
            kind = "loose_hooked_both"
        elif hit_a:
            kind = "loose_hooked_a"
        elif hit_b:
            kind = "loose_hooked_b"
        elif len(c) == 1 and g.cap[min(c)] == 0:
            (v,) = c
            near_a = any(w in d_set and w < n_a for w in nbrs[v])
            near_b = any(w in d_set and w >= n_a for w in nbrs[v])
            if near_a and near_b:
                kind = "inactive_hooked_both"
            elif near_a:
                kind = "inactive_hooked_a"
            elif near_b:
                kind = "inactive_hooked_b"
            else:
                kind = "consistent"
        else:
            kind = "consistent"
        labelled.append((c, kind))

    # verifying sets attain the minimum cost, computed without reference to best
    costs = []
    for zm in range(1 << n):
        cost = sum(g.cap[v] for v in range(n) if not zm >> v & 1)
        cost += sum(1 for u, v in g.edges if zm >> u & 1 and zm >> v & 1)
        costs.append(cost)
    min_cost = min(costs)
    verifying = [
        frozenset(v for v in range(n) if zm >> v & 1) for zm in range(1 << n) if costs[zm] == min_cost
    ]

    return OracleReport(
        max_size=best,
        all_max_matchings=[frozenset(e for e in range(g.m) if mk >> e & 1) for mk in masks],
        edge_class=tuple(classes),
        d_set=frozenset(d_set),
        components=labelled,
        verifying_sets=verifying,
        min_cost=min_cost,
        order=_order_closure(g, classes, comps),
    )


def _order_closure(g: BipartiteGraph, classes, comps) -> frozenset:
    """Closure of: C <= D if an inevitable edge joins C&A to D&B, or a
    forbidden edge joins D&A to C&B."""
    where = {}
    for i, c in enumerate(comps):
        for v in c:
            where[v] = i
    k = len(comps)
    rel = [[i == j for j in range(k)] for i in range(k)]
    for e, (a, b) in enumerate(g.edges):
        if classes[e] == INEVITABLE:
            rel[where[a]][where[b]] = True
        elif classes[e] == FORBIDDEN:
            rel[where[b]][where[a]] = True
    for mid in range(k):
        for i in range(k):
            if rel[i][mid]:
                row_m = rel[mid]
                row_i = rel[i]
                for j in range(k):
                    if row_m[j]:
                        row_i[j] = True
    return frozenset((comps[i], comps[j]) for i in range(k) for j in range(k) if rel[i][j])


def random_instance(
    rng: random.Random,
    max_side: int = 4,
    caps: tuple[int, ...] = (0, 1, 2),
    p: float = 0.5,
    min_side: int = 1,
) -> BipartiteGraph:
    """Random graph with ``min_side..max_side`` vertices per side."""
    n_a = rng.randint(min_side, max_side)
    n_b = rng.randint(min_side, max_side)
    edges = [(i, j) for i in range(n_a) for j in range(n_b) if rng.random() < p]
    cap = [rng.choice(caps) for _ in range(n_a + n_b)]
    return build_graph(n_a, n_b, edges, cap)


@dataclass
class Divergence:
    field: str
    detail: str

    def __str__(self) -> str:
        return f"{self.field}: {self.detail}"


def equivalence_check(g: BipartiteGraph, report: OracleReport | None = None) -> Divergence | None:
    """Compare the fast pipeline with the oracle; ``None`` means they agree."""
    from bdm.pipeline import run_pipeline

    if report is None:
        report = oracle_report(g)
    fast = run_pipeline(g, enumerate_cap=1 << 20)

    if fast.matching.size != report.max_size:
        return Divergence("max_size", f"fast {fast.matching.size} vs oracle {report.max_size}")
    fast_classes = tuple(c.value for c in fast.classification.classes)
    if fast_classes != report.edge_class:
        bad = [
            f"{g.edge_name(e)}: fast {x} vs oracle {y}"
            for e, (x, y) in enumerate(zip(fast_classes, report.edge_class))
            if x != y
        ]
        return Divergence("edge_class", "; ".join(bad))
    if fast.d_set != report.d_set:
        return Divergence("d_set", f"fast {sorted(fast.d_set)} vs oracle {sorted(report.d_set)}")
    fast_parts = {c.vertex_set: c.kind.value for c in fast.decomposition.components}
    oracle_parts = report.kinds
    if set(fast_parts) != set(oracle_parts):
        return Divergence(
            "components",
            f"fast {sorted(map(sorted, fast_parts))} vs oracle {sorted(map(sorted, oracle_parts))}",
        )
    for vs, kind in oracle_parts.items():
        if fast_parts[vs] != kind:
            return Divergence("kinds", f"component {sorted(vs)}: fast {fast_parts[vs]} vs oracle {kind}")
    if fast.verifying.truncated or set(fast.verifying.sets) != set(report.verifying_sets):
        missing = set(report.verifying_sets) - set(fast.verifying.sets)
        extra = set(fast.verifying.sets) - set(report.verifying_sets)
        return Divergence(
            "verifying_sets",
            f"missing {sorted(map(sorted, missing))}, extra {sorted(map(sorted, extra))}",
        )
    d = fast.decomposition
    vs_of = [c.vertex_set for c in d.components]
    fast_order = frozenset((vs_of[i], vs_of[j]) for i, j in d.closure_pairs())
    if fast_order != report.order:
        return Divergence("order", "component order closures differ")
    return None
