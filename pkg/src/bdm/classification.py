"""Edge classes, loose-attainable vertices and canonical verifying sets."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from bdm import kernels
from bdm.decomposition import Decomposition
from bdm.errors import InconsistentDecomposition
from bdm.graph import BipartiteGraph
from bdm.matching import Matching


class EdgeClass(enum.Enum):
    FORBIDDEN = "forbidden"
    INEVITABLE = "inevitable"
    FLEXIBLE = "flexible"

    @property
    def allowed(self) -> bool:
        return self is not EdgeClass.FORBIDDEN


@dataclass(frozen=True, eq=False)
class EdgeClassification:
    decomposition: Decomposition
    classes: tuple[EdgeClass, ...]

    def __getitem__(self, e: int) -> EdgeClass:
        return self.classes[e]

    def edges_of(self, cls: EdgeClass) -> frozenset[int]:
        return frozenset(e for e, c in enumerate(self.classes) if c is cls)

    @property
    def allowed(self) -> frozenset[int]:
        return frozenset(e for e, c in enumerate(self.classes) if c.allowed)


def classify_edges(g: BipartiteGraph, m: Matching, d: Decomposition) -> EdgeClassification:
    """Edges inside a flexible component are flexible; the others are
    inevitable if matched and forbidden if not."""
    if d.graph is not g and d.graph != g:
        raise InconsistentDecomposition("decomposition belongs to a different graph")
    if len(m.member) != g.m or len(d.comp_of) != g.n:
        raise InconsistentDecomposition("matching or decomposition does not fit the graph")
    comp_of = d.comp_of
    classes = []
    for (u, v), x in zip(g.edges, m.member):
        if comp_of[u] == comp_of[v]:
            classes.append(EdgeClass.FLEXIBLE)
        elif x:
            classes.append(EdgeClass.INEVITABLE)
        else:
            classes.append(EdgeClass.FORBIDDEN)
    return EdgeClassification(d, tuple(classes))


def loose_attainable(d: Decomposition) -> frozenset[int]:
    """Vertices that are loose under at least one maximum b-matching."""
    n_a = d.graph.n_a
    return frozenset(v for v in d.ext_a if v < n_a) | frozenset(v for v in d.ext_b if v >= n_a)


def elementary_components(g: BipartiteGraph, cls: EdgeClassification) -> list[frozenset[int]]:
    """Connected components over allowed edges, isolated vertices as singletons."""
    tails = []
    heads = []
    for e, c in enumerate(cls.classes):
        if c.allowed:
            u, v = g.edges[e]
            tails += (u, v)
            heads += (v, u)
    indptr, indices = kernels.build_csr(g.n, tails, heads)
    labels = kernels.int_array([-1]) * g.n
    count = kernels.component_labels(indptr, indices, bytearray(b"\x01") * g.n, labels)
    groups: list[list[int]] = [[] for _ in range(count)]
    for v in range(g.n):
        groups[labels[v]].append(v)
    return [frozenset(x) for x in groups]


def canonical_verifying_sets(d: Decomposition) -> tuple[frozenset[int], frozenset[int]]:
    """The two extreme verifying sets determined by the inconsistent units.

    ``(ext_A & A) | (B - ext_A)`` and ``(ext_B & B) | (A - ext_B)``.
    """
    g = d.graph
    side_a = frozenset(range(g.n_a))
    side_b = frozenset(range(g.n_a, g.n))
    z1 = (d.ext_a & side_a) | (side_b - d.ext_a)
    z2 = (d.ext_b & side_b) | (side_a - d.ext_b)
    return z1, z2
