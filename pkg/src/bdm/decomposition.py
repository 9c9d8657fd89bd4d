"""Flexible components of a bipartite b-matching instance and their canonical order.

Given a maximum b-matching ``M`` the decomposition is built in linear time:

1. the inconsistent units ``ext_A`` / ``ext_B`` are the vertices reachable
   from the loose vertices of each side in the alternating digraph;
2. inactive vertices in a unit are singleton components, the remaining
   vertices of the unit split into connected components;
3. the rest of the graph splits into strongly connected components of the
   reverse alternating digraph, whose condensation gives the order among
   them;
4. inconsistent components are attached below (side A) or above (side B)
   the components they touch.
"""

from __future__ import annotations

import enum
import operator
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import compress
from typing import NamedTuple

from bdm import kernels
from bdm.errors import (
    InconsistentDecomposition,
    NotABMatching,
    NotMaximumMatching,
    RequiresEdgeClassification,
    UnknownComponent,
)
from bdm.graph import BipartiteGraph, Side
from bdm.matching import Matching

# above this many components order queries walk the arcs instead of using closure bitsets
CLOSURE_LIMIT = 4096


class ComponentKind(enum.Enum):
    CONSISTENT = "consistent"
    LOOSE_HOOKED_A = "loose_hooked_a"
    LOOSE_HOOKED_B = "loose_hooked_b"
    INACTIVE_HOOKED_A = "inactive_hooked_a"
    INACTIVE_HOOKED_B = "inactive_hooked_b"

    @property
    def hooked_side(self) -> Side | None:
        if self in (ComponentKind.LOOSE_HOOKED_A, ComponentKind.INACTIVE_HOOKED_A):
            return Side.A
        if self in (ComponentKind.LOOSE_HOOKED_B, ComponentKind.INACTIVE_HOOKED_B):
            return Side.B
        return None

    @property
    def inactive(self) -> bool:
        return self in (ComponentKind.INACTIVE_HOOKED_A, ComponentKind.INACTIVE_HOOKED_B)

    @property
    def loose(self) -> bool:
        return self in (ComponentKind.LOOSE_HOOKED_A, ComponentKind.LOOSE_HOOKED_B)

    def swapped(self) -> "ComponentKind":
        return _SWAP[self]


_SWAP = {
    ComponentKind.CONSISTENT: ComponentKind.CONSISTENT,
    ComponentKind.LOOSE_HOOKED_A: ComponentKind.LOOSE_HOOKED_B,
    ComponentKind.LOOSE_HOOKED_B: ComponentKind.LOOSE_HOOKED_A,
    ComponentKind.INACTIVE_HOOKED_A: ComponentKind.INACTIVE_HOOKED_B,
    ComponentKind.INACTIVE_HOOKED_B: ComponentKind.INACTIVE_HOOKED_A,
}


class FlexComponent(NamedTuple):
    id: int
    vertices: tuple[int, ...]
    kind: ComponentKind

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


class ComponentTable(Sequence):
    """Read-only sequence of :class:`FlexComponent` backed by CSR arrays.

    Entries are built on access, which keeps construction cheap when there
    are many components.
    """

    __slots__ = ("_starts", "_members", "_cat")

    def __init__(self, starts, members, cat):
        self._starts = starts
        self._members = members
        self._cat = cat

    def __len__(self) -> int:
        return len(self._cat)

    def __getitem__(self, c):
        if isinstance(c, slice):
            return [self[i] for i in range(*c.indices(len(self)))]
        if c < 0:
            c += len(self)
        if not 0 <= c < len(self):
            raise IndexError(c)
        lo, hi = self._starts[c], self._starts[c + 1]
        return FlexComponent(c, tuple(self._members[lo:hi]), _KIND_OF_CAT[self._cat[c]])

    def __iter__(self):
        for c in range(len(self)):
            yield self[c]

    def __repr__(self) -> str:
        return f"ComponentTable({len(self)} components)"


class ArcList(Sequence):
    """Read-only sequence of ``(source, target)`` pairs over two parallel arrays."""

    __slots__ = ("_s", "_t")

    def __init__(self, sources, targets):
        self._s = sources
        self._t = targets

    def __len__(self) -> int:
        return len(self._s)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return list(zip(self._s[i], self._t[i]))
        return (self._s[i], self._t[i])

    def __iter__(self):
        return zip(self._s, self._t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sequence):
            return NotImplemented
        return len(self) == len(other) and all(map(operator.eq, self, other))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ArcList({list(self)!r})"


@dataclass(frozen=True)
class AuxDigraph:
    """Alternating digraph on (a subset of) the vertex ids of a graph."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    vertices: frozenset[int]

    def csr(self):
        return kernels.build_csr(self.n, [t for t, _ in self.arcs], [h for _, h in self.arcs])


def build_aux(
    g: BipartiteGraph,
    first: Side,
    m: Matching,
    restrict: Iterable[int] | None = None,
) -> AuxDigraph:
    """Alternating digraph with ``first`` as the source side of free edges.

    For an edge ``uv`` with ``u`` on side ``first``: if ``uv`` is matched the
    arc is ``v -> u``, otherwise ``u -> v``. With ``restrict`` only edges with
    both ends inside it are used.
    """
    keep = None if restrict is None else frozenset(restrict)
    arcs = []
    for e, (a, b) in enumerate(g.edges):
        if keep is not None and (a not in keep or b not in keep):
            continue
        u, v = (a, b) if first is Side.A else (b, a)
        arcs.append((v, u) if m.member[e] else (u, v))
    verts = frozenset(range(g.n)) if keep is None else keep
    return AuxDigraph(g.n, tuple(arcs), verts)


@dataclass(frozen=True)
class Condensation:
    components: list[list[int]]
    arcs: list[tuple[int, int]]


def strongly_connected_components(d: AuxDigraph) -> Condensation:
    """SCCs of ``d`` numbered by smallest member vertex, plus deduplicated condensation arcs."""
    indptr, indices = d.csr()
    active = bytearray(d.n)
    for v in d.vertices:
        active[v] = 1
    labels = kernels.int_array([-1]) * d.n
    kernels.scc_labels(indptr, indices, active, labels)
    renum: dict[int, int] = {}
    comps: list[list[int]] = []
    comp_of = [-1] * d.n
    for v in range(d.n):
        if not active[v]:
            continue
        lab = labels[v]
        cid = renum.get(lab)
        if cid is None:
            cid = renum[lab] = len(comps)
            comps.append([])
        comps[cid].append(v)
        comp_of[v] = cid
    arcs = sorted(
        {(comp_of[t], comp_of[h]) for t, h in d.arcs if comp_of[t] != comp_of[h]}
    )
    return Condensation(comps, arcs)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Flexible components, their kinds, and the generating arcs of the A-order."""

    graph: BipartiteGraph
    matching: Matching
    components: Sequence[FlexComponent]
    comp_of: Sequence[int]
    order_arcs: Sequence[tuple[int, int]]
    ext_a_mark: bytes = field(repr=False)
    ext_b_mark: bytes = field(repr=False)
    topo_order: Sequence[int] = field(repr=False)
    _closure: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def k(self) -> int:
        return len(self.components)

    @cached_property
    def ext_a(self) -> frozenset[int]:
        """Inconsistent unit hooked by side A."""
        return frozenset(compress(range(len(self.ext_a_mark)), self.ext_a_mark))

    @cached_property
    def ext_b(self) -> frozenset[int]:
        return frozenset(compress(range(len(self.ext_b_mark)), self.ext_b_mark))

    def component(self, cid: int) -> FlexComponent:
        if not 0 <= cid < len(self.components):
            raise UnknownComponent(cid)
        return self.components[cid]

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.components]
        for s, t in self.order_arcs:
            out[s].append(t)
        return out

    def predecessors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.components]
        for s, t in self.order_arcs:
            out[t].append(s)
        return out

    def ids_of_kind(self, *kinds: ComponentKind) -> frozenset[int]:
        return frozenset(c.id for c in self.components if c.kind in kinds)

    @property
    def inconsistent_a(self) -> frozenset[int]:
        return self.ids_of_kind(ComponentKind.LOOSE_HOOKED_A, ComponentKind.INACTIVE_HOOKED_A)

    @property
    def inconsistent_b(self) -> frozenset[int]:
        return self.ids_of_kind(ComponentKind.LOOSE_HOOKED_B, ComponentKind.INACTIVE_HOOKED_B)

    def descendants(self, cid: int) -> frozenset[int]:
        """All ``c`` with ``cid <= c`` in the order (``cid`` included)."""
        self.component(cid)
        if self.k <= CLOSURE_LIMIT:
            bits = self.closure_bits()[cid]
            return frozenset(c for c in range(self.k) if bits >> c & 1)
        succ = self.successors()
        seen = {cid}
        stack = [cid]
        while stack:
            u = stack.pop()
            for w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def closure_bits(self) -> tuple[int, ...]:
        """Row bitsets of the reflexive-transitive closure (bit ``j`` of row ``i``: ``i <= j``)."""
        if self._closure is None:
            # computed on first use and cached; the dataclass is frozen
            object.__setattr__(self, "_closure", _closure_bits(self.k, self.order_arcs, self.topo_order))
        return self._closure

    def closure_pairs(self) -> frozenset[tuple[int, int]]:
        bits = self.closure_bits()
        return frozenset((i, j) for i in range(self.k) for j in range(self.k) if bits[i] >> j & 1)


def poset_leq(d: Decomposition, c1: int, c2: int) -> bool:
    """``c1 <= c2`` in the canonical order over flexible components (side A)."""
    d.component(c1)
    d.component(c2)
    if d.k <= CLOSURE_LIMIT:
        return bool(d.closure_bits()[c1] >> c2 & 1)
    return c2 in d.descendants(c1)


def _closure_bits(k: int, arcs, topo: Sequence[int]) -> tuple[int, ...]:
    succ: list[list[int]] = [[] for _ in range(k)]
    for s, t in arcs:
        succ[s].append(t)
    bits = [0] * k
    for u in reversed(topo):
        row = 1 << u
        for w in succ[u]:
            row |= bits[w]
        bits[u] = row
    return tuple(bits)


_KIND_OF_CAT = {
    kernels.CONSISTENT: ComponentKind.CONSISTENT,
    kernels.LOOSE_A: ComponentKind.LOOSE_HOOKED_A,
    kernels.INACTIVE_A: ComponentKind.INACTIVE_HOOKED_A,
    kernels.LOOSE_B: ComponentKind.LOOSE_HOOKED_B,
    kernels.INACTIVE_B: ComponentKind.INACTIVE_HOOKED_B,
}


def _bits(mask: bytes) -> int:
    return int.from_bytes(mask, "little")


def _mask(bits: int, n: int) -> bytearray:
    return bytearray(bits.to_bytes(n, "little"))


def inconsistent_unit(g: BipartiteGraph, m: Matching, side: Side) -> frozenset[int]:
    """Vertices reachable from the loose vertices of ``side`` in the alternating
    digraph whose free edges leave ``side``."""
    tails = kernels.zeros(g.m)
    heads = kernels.zeros(g.m)
    kernels.alt_arcs(g.ends_a, g.ends_b, m.member, tails, heads)
    if side is Side.B:
        tails, heads = heads, tails
    indptr, indices = kernels.build_csr(g.n, tails, heads)
    sources = [v for v in g.side_vertices(side) if m.load[v] < g.cap[v]]
    mark = bytearray(g.n)
    kernels.reach(indptr, indices, sources, mark)
    return frozenset(compress(range(g.n), mark))


def decompose(g: BipartiteGraph, m: Matching) -> Decomposition:
    """Decompose ``g`` into flexible components using the maximum b-matching ``m``.

    Raises :class:`NotMaximumMatching` if ``m`` is a b-matching that is not
    maximum, and :class:`NotABMatching` if it violates a capacity.
    """
    if m.graph is not g and m.graph != g:
        raise NotABMatching("matching belongs to a different graph")
    if not all(map(operator.le, m.load, g.cap)):
        raise NotABMatching("edge set violates a vertex capacity")
    n, n_a = g.n, g.n_a
    cap = g.cap_arr
    member = m.member

    # alternating digraph: matched edge b->a, free edge a->b; the reverse
    # digraph is the same construction with the sides exchanged
    tails = kernels.zeros(g.m)
    heads = kernels.zeros(g.m)
    kernels.alt_arcs(g.ends_a, g.ends_b, member, tails, heads)
    fwd = kernels.build_csr(n, tails, heads)
    rev = kernels.build_csr(n, heads, tails)

    loose = list(map(operator.lt, m.load, g.cap))
    ext_a_mark = bytearray(n)
    kernels.reach(*fwd, list(compress(range(n_a), loose[:n_a])), ext_a_mark)
    ext_b_mark = bytearray(n)
    kernels.reach(*rev, list(compress(range(n_a, n), loose[n_a:])), ext_b_mark)

    # the canonical verifying set for side A costs |M| iff M is maximum
    cost = kernels.unit_cost(n_a, cap, g.ends_a, g.ends_b, ext_a_mark)
    if cost != m.size:
        raise NotMaximumMatching(f"matching of size {m.size} is not maximum (bound {cost})")
    ea, eb = _bits(ext_a_mark), _bits(ext_b_mark)
    if ea & eb:
        raise InconsistentDecomposition("inconsistent units overlap")

    active = _bits(bytes(map(bool, g.cap)))
    ones = _bits(b"\x01" * n)
    v0 = _mask(ones & ~(ea | eb), n)

    labels_a = kernels.int_array([-1]) * n
    n_la = kernels.component_labels(g.adj_indptr, g.nbr_indices, _mask(ea & active, n), labels_a)
    labels_b = kernels.int_array([-1]) * n
    n_lb = kernels.component_labels(g.adj_indptr, g.nbr_indices, _mask(eb & active, n), labels_b)
    labels_c = kernels.int_array([-1]) * n
    kernels.scc_labels(rev[0], rev[1], v0, labels_c)

    key = kernels.zeros(n)
    vcat = kernels.zeros(n)
    nkeys = kernels.compose_keys(cap, ext_a_mark, labels_a, n_la, labels_b, n_lb, labels_c, key, vcat)
    comp_of = kernels.zeros(n)
    k = kernels.renumber(key, nkeys, comp_of)

    # group vertices by component; counting sort keeps them ascending
    starts, members = kernels.build_csr(k, comp_of, kernels.int_array(range(n)))
    cat = kernels.zeros(k)
    kernels.scatter(comp_of, vcat, cat)

    cand_s = kernels.zeros(4 * g.m)
    cand_t = kernels.zeros(4 * g.m)
    cnt = kernels.order_arc_candidates(comp_of, g.ends_a, g.ends_b, member, v0, cat, cand_s, cand_t)
    arc_s = kernels.zeros(cnt)
    arc_t = kernels.zeros(cnt)
    n_arcs = kernels.dedupe_arcs(k, cand_s, cand_t, cnt, arc_s, arc_t)
    del arc_s[n_arcs:], arc_t[n_arcs:]

    arc_ptr, arc_heads = kernels.build_csr(k, arc_s, arc_t)
    topo = kernels.zeros(k)
    if kernels.topo_order(arc_ptr, arc_heads, topo) != k:
        raise InconsistentDecomposition("order arcs contain a cycle")

    return Decomposition(
        graph=g,
        matching=m,
        components=ComponentTable(starts, members, cat),
        comp_of=comp_of,
        order_arcs=ArcList(arc_s, arc_t),
        ext_a_mark=bytes(ext_a_mark),
        ext_b_mark=bytes(ext_b_mark),
        topo_order=topo,
    )


def transitive_reduction(d: Decomposition) -> list[tuple[int, int]]:
    """Hasse arcs of the order: generating arcs not implied by a longer path."""
    bits = d.closure_bits()
    succ = d.successors()
    out = []
    for u in range(d.k):
        direct = sorted(set(succ[u]))
        for w in direct:
            if not any(x != w and bits[x] >> w & 1 for x in direct):
                out.append((u, w))
    return out


def restricted_capacity(d: Decomposition, cid: int, classification) -> dict[int, int]:
    """``b(v)`` minus the inevitable edges leaving component ``cid``, for each member ``v``."""
    if classification is None or getattr(classification, "decomposition", None) is not d:
        raise RequiresEdgeClassification(
            "restricted capacities need the edge classification of this decomposition"
        )
    from bdm.classification import EdgeClass

    comp = d.component(cid)
    g = d.graph
    out = {}
    for v in comp.vertices:
        k = 0
        for e in g.incident(v):
            u, w = g.edges[e]
            other = w if u == v else u
            if d.comp_of[other] != cid and classification.classes[e] is EdgeClass.INEVITABLE:
                k += 1
        out[v] = g.cap[v] - k
    return out
