"""Maximum b-matchings on bipartite graphs."""

from __future__ import annotations

from collections.abc import Iterable

from bdm import kernels
from bdm.errors import NotABMatching, UnknownEdgeId
from bdm.graph import BipartiteGraph, Side


class Matching:
    """A set of edges of a fixed graph, with per-vertex loads.

    The object is immutable; it need not respect the capacities (see
    :attr:`is_valid`), which lets callers represent candidate edge sets.
    """

    __slots__ = ("graph", "member", "load", "_edges")

    def __init__(self, graph: BipartiteGraph, member: bytes, load: Iterable[int]):
        self.graph = graph
        self.member = bytes(member)
        self.load = tuple(load)
        self._edges = frozenset(e for e, x in enumerate(self.member) if x)

    @classmethod
    def from_edges(cls, g: BipartiteGraph, edge_ids: Iterable[int]) -> "Matching":
        member = bytearray(g.m)
        load = [0] * g.n
        for e in edge_ids:
            if not 0 <= e < g.m:
                raise UnknownEdgeId(e)
            if member[e]:
                continue
            member[e] = 1
            u, v = g.edges[e]
            load[u] += 1
            load[v] += 1
        return cls(g, member, load)

    @property
    def edges(self) -> frozenset[int]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, e: int) -> bool:
        return 0 <= e < len(self.member) and bool(self.member[e])

    @property
    def is_valid(self) -> bool:
        cap = self.graph.cap
        return all(x <= c for x, c in zip(self.load, cap))

    def is_loose(self, v: int) -> bool:
        return self.load[v] < self.graph.cap[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.graph == other.graph and self.member == other.member

    def __hash__(self) -> int:
        return hash(self.member)

    def __repr__(self) -> str:
        names = ", ".join(self.graph.edge_name(e) for e in sorted(self._edges))
        return f"Matching({{{names}}})"


def is_b_matching(g: BipartiteGraph, edge_ids: Iterable[int]) -> bool:
    """True iff the edge set respects every vertex capacity."""
    return Matching.from_edges(g, edge_ids).is_valid


def _as_matching(g: BipartiteGraph, m) -> Matching:
    if isinstance(m, Matching):
        return m
    return Matching.from_edges(g, m)


def loose_vertices(g: BipartiteGraph, m, side: Side) -> frozenset[int]:
    """Vertices of ``side`` whose load is below capacity."""
    m = _as_matching(g, m)
    if not m.is_valid:
        raise NotABMatching("edge set violates a vertex capacity")
    return frozenset(v for v in g.side_vertices(side) if m.load[v] < g.cap[v])


def max_b_matching(g: BipartiteGraph, start=None) -> Matching:
    """Maximum-cardinality b-matching.

    Starts from a greedy matching (edges in id order) unless ``start`` is
    given, then runs phases of shortest augmenting paths. Deterministic.
    """
    if start is None:
        member = bytearray(g.m)
        load = kernels.zeros(g.n)
        cap = g.cap
        for e, (u, v) in enumerate(g.edges):
            if load[u] < cap[u] and load[v] < cap[v]:
                member[e] = 1
                load[u] += 1
                load[v] += 1
    else:
        start = _as_matching(g, start)
        if not start.is_valid:
            raise NotABMatching("start matching violates a vertex capacity")
        member = bytearray(start.member)
        load = kernels.int_array(start.load)
    kernels.augment_b_matching(
        g.n_a,
        g.ends_a,
        g.ends_b,
        g.adj_indptr,
        g.adj_edges,
        g.cap_arr,
        member,
        load,
    )
    return Matching(g, member, load)


def has_augmenting_path(g: BipartiteGraph, m: Matching) -> bool:
    """True iff some alternating path joins a loose A vertex to a loose B vertex."""
    tails = [v if x else u for (u, v), x in zip(g.edges, m.member)]
    heads = [u if x else v for (u, v), x in zip(g.edges, m.member)]
    indptr, indices = kernels.build_csr(g.n, tails, heads)
    mark = bytearray(g.n)
    sources = [a for a in range(g.n_a) if m.load[a] < g.cap[a]]
    kernels.reach(indptr, indices, sources, mark)
    return any(mark[v] and m.load[v] < g.cap[v] for v in range(g.n_a, g.n))


def is_maximum(g: BipartiteGraph, m) -> bool:
    m = _as_matching(g, m)
    return m.is_valid and not has_augmenting_path(g, m)
