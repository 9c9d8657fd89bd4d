"""Bipartite graphs with vertex capacities, plus the basic set algebra on them.

Vertices are dense integers: side A occupies ``0..n_a-1`` and side B
``n_a..n_a+n_b-1``. Edges are numbered in input order. Vertex sets are plain
``frozenset`` objects of vertex ids; edge sets are ``frozenset`` of edge ids.
"""

from __future__ import annotations

import enum
from array import array
from collections.abc import Iterable, Mapping, Sequence
from typing import Union

from bdm import kernels
from bdm.errors import DuplicateEdge, IndexOutOfRange, NegativeCapacity

Caps = Union[None, Sequence[int], Mapping[int, int]]


class Side(enum.Enum):
    A = "A"
    B = "B"

    def opposite(self) -> "Side":
        return Side.B if self is Side.A else Side.A


class BipartiteGraph:
    """Immutable simple bipartite graph with a capacity ``b(v) >= 0`` per vertex.

    Use :func:`build_graph` rather than calling the constructor directly.
    """

    __slots__ = (
        "n_a",
        "n_b",
        "edges",
        "cap",
        "cap_arr",
        "ends_a",
        "ends_b",
        "adj_indptr",
        "adj_edges",
        "nbr_indices",
        "_edge_index",
    )

    def __init__(self, n_a: int, n_b: int, edges: Sequence[tuple[int, int]], cap: Sequence[int]):
        self.n_a = n_a
        self.n_b = n_b
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.cap: tuple[int, ...] = tuple(cap)
        self.cap_arr = kernels.int_array(self.cap)
        self.ends_a = kernels.int_array(u for u, _ in self.edges)
        self.ends_b = kernels.int_array(v for _, v in self.edges)
        self._edge_index = {uv: i for i, uv in enumerate(self.edges)}
        n = n_a + n_b
        m = len(self.edges)
        # incidence CSR: vertex -> incident edge ids, ascending
        edge_ids = kernels.int_array(range(m))
        tails = self.ends_a + self.ends_b
        self.adj_indptr, self.adj_edges = kernels.build_csr(n, tails, edge_ids + edge_ids)
        # neighbour CSR shares adj_indptr
        other = self.ends_b + self.ends_a
        self.nbr_indices = kernels.build_csr(n, tails, other)[1]

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self.n_a + self.n_b

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def side(self, v: int) -> Side:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in graph")
        return Side.A if v < self.n_a else Side.B

    def side_vertices(self, side: Side) -> range:
        return range(self.n_a) if side is Side.A else range(self.n_a, self.n)

    def incident(self, v: int) -> array:
        return self.adj_edges[self.adj_indptr[v] : self.adj_indptr[v + 1]]

    def neighbors_of(self, v: int) -> array:
        return self.nbr_indices[self.adj_indptr[v] : self.adj_indptr[v + 1]]

    def degree(self, v: int) -> int:
        return self.adj_indptr[v + 1] - self.adj_indptr[v]

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge joining ``u`` and ``v`` (in either order)."""
        if u >= self.n_a:
            u, v = v, u
        try:
            return self._edge_index[(u, v)]
        except KeyError:
            raise KeyError(f"no edge between {u} and {v}") from None

    def name(self, v: int) -> str:
        return f"a{v}" if v < self.n_a else f"b{v - self.n_a}"

    def vertex_by_name(self, name: str) -> int:
        if len(name) < 2 or name[0] not in "ab" or not name[1:].isdigit():
            raise IndexOutOfRange(f"bad vertex name {name!r}")
        i = int(name[1:])
        if name[0] == "a":
            if i >= self.n_a:
                raise IndexOutOfRange(f"vertex {name} out of range")
            return i
        if i >= self.n_b:
            raise IndexOutOfRange(f"vertex {name} out of range")
        return self.n_a + i

    def edge_name(self, e: int) -> str:
        u, v = self.edges[e]
        return f"{self.name(u)}-{self.name(v)}"

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_a={self.n_a}, n_b={self.n_b}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n_a, self.n_b, self.edges, self.cap) == (
            other.n_a,
            other.n_b,
            other.edges,
            other.cap,
        )

    def __hash__(self) -> int:
        return hash((self.n_a, self.n_b, self.edges, self.cap))


def build_graph(
    a_count: int,
    b_count: int,
    edges: Iterable[tuple[int, int]],
    caps: Caps = None,
) -> BipartiteGraph:
    """Validate and build a graph from side-local edge indices.

    ``edges`` holds ``(a_index, b_index)`` pairs. ``caps`` is either ``None``
    (every capacity 1), a sequence of ``a_count + b_count`` capacities indexed
    by vertex id, or a mapping from vertex id to capacity (missing ids get 1).
    """
    if a_count < 0 or b_count < 0:
        raise IndexOutOfRange("side sizes must be non-negative")
    n = a_count + b_count
    seen = set()
    glob = []
    for pair in edges:
        i, j = pair
        if not (0 <= i < a_count) or not (0 <= j < b_count):
            raise IndexOutOfRange(f"edge {(i, j)} out of range for sides {a_count}x{b_count}")
        if (i, j) in seen:
            raise DuplicateEdge(f"edge {(i, j)} appears twice")
        seen.add((i, j))
        glob.append((i, a_count + j))

    if caps is None:
        cap = [1] * n
    elif isinstance(caps, Mapping):
        cap = [1] * n
        for v, k in caps.items():
            if not 0 <= v < n:
                raise IndexOutOfRange(f"capacity given for unknown vertex {v}")
            cap[v] = k
    else:
        cap = list(caps)
        if len(cap) != n:
            raise IndexOutOfRange(f"expected {n} capacities, got {len(cap)}")
    for v, k in enumerate(cap):
        if int(k) != k:
            raise NegativeCapacity(f"capacity of vertex {v} is not an integer: {k!r}")
        if k < 0:
            raise NegativeCapacity(f"capacity of vertex {v} is negative: {k}")
    return BipartiteGraph(a_count, b_count, glob, [int(k) for k in cap])


def swap_sides(g: BipartiteGraph) -> tuple[BipartiteGraph, list[int]]:
    """Graph with the colour classes exchanged.

    Returns the new graph and ``new_id[v]`` for each old vertex ``v``.
    """
    new_id = [g.n_b + v for v in range(g.n_a)] + [v - g.n_a for v in range(g.n_a, g.n)]
    cap = [0] * g.n
    for v in range(g.n):
        cap[new_id[v]] = g.cap[v]
    edges = [(v - g.n_a, u) for u, v in g.edges]
    return build_graph(g.n_b, g.n_a, edges, cap), new_id


def complement(g: BipartiteGraph, xs: Iterable[int]) -> frozenset[int]:
    return frozenset(range(g.n)).difference(xs)


def neighbors(g: BipartiteGraph, xs: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to some vertex of ``xs`` but not in ``xs``."""
    xs = frozenset(xs)
    out = set()
    for x in xs:
        out.update(g.neighbors_of(x))
    return frozenset(out - xs)


def edges_between(g: BipartiteGraph, xs: Iterable[int], ys: Iterable[int]) -> frozenset[int]:
    """Edge ids with one end in ``xs`` and the other in ``ys``."""
    xs = frozenset(xs)
    ys = frozenset(ys)
    return frozenset(
        e
        for e, (u, v) in enumerate(g.edges)
        if (u in xs and v in ys) or (v in xs and u in ys)
    )


def edges_within(g: BipartiteGraph, xs: Iterable[int]) -> frozenset[int]:
    xs = frozenset(xs)
    return frozenset(e for e, (u, v) in enumerate(g.edges) if u in xs and v in xs)


def cut(g: BipartiteGraph, xs: Iterable[int]) -> frozenset[int]:
    xs = frozenset(xs)
    return frozenset(e for e, (u, v) in enumerate(g.edges) if (u in xs) != (v in xs))
