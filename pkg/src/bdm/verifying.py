"""Verifying sets and their description by normalized ideals of the component order.

A verifying set ``Z`` attains ``min_Z b(V - Z) + |E[Z]|``, which equals the
size of a maximum b-matching. Every verifying set is the A-part of a
normalized lower ideal of flexible components together with the B-part of
the complementary upper ideal, and vice versa.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from bdm.decomposition import Decomposition
from bdm.errors import (
    MalformedSet,
    NotAnIdeal,
    NotMaximumMatching,
    NotNormalized,
    NotVerifying,
    UnknownComponent,
)
from bdm.graph import BipartiteGraph
from bdm.matching import Matching, is_maximum


def verifying_cost(g: BipartiteGraph, z: Iterable[int]) -> int:
    """``b(V - Z) + |E[Z]|``."""
    z = frozenset(z)
    cost = sum(c for v, c in enumerate(g.cap) if v not in z)
    cost += sum(1 for u, v in g.edges if u in z and v in z)
    return cost


def is_verifying(g: BipartiteGraph, z: Iterable[int], m: Matching) -> bool:
    """True iff ``Z`` attains the min-max bound; ``m`` must be a maximum b-matching."""
    if not is_maximum(g, m):
        raise NotMaximumMatching("is_verifying needs a maximum b-matching")
    return verifying_cost(g, z) == m.size


@dataclass(frozen=True)
class NormalizedIdealPair:
    lower: frozenset[int]
    upper: frozenset[int]


def check_ideal_pair(d: Decomposition, p: NormalizedIdealPair) -> None:
    """Raise unless ``p`` is a complementary, normalized (lower, upper) pair."""
    everything = frozenset(range(d.k))
    for c in p.lower | p.upper:
        if c not in everything:
            raise UnknownComponent(c)
    if p.lower & p.upper or (p.lower | p.upper) != everything:
        raise NotAnIdeal("lower and upper parts must partition the components")
    for s, t in d.order_arcs:
        if t in p.lower and s not in p.lower:
            raise NotAnIdeal(f"component {s} lies below {t} but is not in the lower ideal")
    if not d.inconsistent_a <= p.lower:
        raise NotNormalized("lower ideal must contain every A-hooked inconsistent component")
    if d.inconsistent_b & p.lower:
        raise NotNormalized("lower ideal must avoid every B-hooked inconsistent component")


def ideal_to_verifying(d: Decomposition, p: NormalizedIdealPair) -> frozenset[int]:
    """A-vertices of the lower ideal together with B-vertices of the upper ideal."""
    check_ideal_pair(d, p)
    return _project(d, p.lower)


def _project(d: Decomposition, lower) -> frozenset[int]:
    n_a = d.graph.n_a
    out = []
    for c in d.components:
        want_a = c.id in lower
        out.extend(v for v in c.vertices if (v < n_a) == want_a)
    return frozenset(out)


def verifying_to_ideal(d: Decomposition, z: Iterable[int]) -> NormalizedIdealPair:
    """Inverse of :func:`ideal_to_verifying`.

    A component goes to the lower ideal when its A-vertices are in ``Z`` and
    its B-vertices are not; to the upper ideal in the opposite situation.
    """
    z = frozenset(z)
    n_a = d.graph.n_a
    lower = []
    upper = []
    for c in d.components:
        a_in = [v in z for v in c.vertices if v < n_a]
        b_in = [v in z for v in c.vertices if v >= n_a]
        if all(a_in) and not any(b_in):
            lower.append(c.id)
        elif not any(a_in) and all(b_in):
            upper.append(c.id)
        else:
            raise MalformedSet(f"component {c.id} is split by Z")
    cost = verifying_cost(d.graph, z)
    if cost != d.matching.size:
        raise NotVerifying(f"cost {cost} differs from maximum size {d.matching.size}")
    return NormalizedIdealPair(frozenset(lower), frozenset(upper))


def iter_normalized_lower_ideals(d: Decomposition) -> Iterator[frozenset[int]]:
    """Yield every normalized lower ideal (DFS over a topological order)."""
    preds = d.predecessors()
    forced_in = d.inconsistent_a
    forced_out = d.inconsistent_b
    order = d.topo_order
    yield from _iterate(order, preds, forced_in, forced_out, d.k)


def _iterate(order, preds, forced_in, forced_out, k) -> Iterator[frozenset[int]]:
    inside = bytearray(k)
    # state per position: 0 = try include, 1 = try exclude, 2 = exhausted
    n = len(order)
    state = [0] * (n + 1)
    pos = 0
    while pos >= 0:
        if pos == n:
            yield frozenset(order[i] for i in range(n) if inside[order[i]])
            pos -= 1
            continue
        c = order[pos]
        st = state[pos]
        if st == 0:
            state[pos] = 1
            if c not in forced_out and all(inside[p] for p in preds[c]):
                inside[c] = 1
                state[pos + 1] = 0
                pos += 1
            continue
        if st == 1:
            inside[c] = 0
            state[pos] = 2
            if c not in forced_in:
                state[pos + 1] = 0
                pos += 1
            continue
        pos -= 1


@dataclass(frozen=True)
class VerifyingFamily:
    sets: list[frozenset[int]]
    truncated: bool


def bitmap_key(n: int, z: frozenset[int]) -> tuple[int, ...]:
    return tuple(1 if v in z else 0 for v in range(n))


def enumerate_verifying_sets(d: Decomposition, cap: int = 10_000) -> VerifyingFamily:
    """All verifying sets, at most ``cap`` of them, ordered by membership bitmap."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    found = set()
    truncated = False
    for lower in iter_normalized_lower_ideals(d):
        if len(found) >= cap:
            truncated = True
            break
        found.add(_project(d, lower))
    n = d.graph.n
    return VerifyingFamily(sorted(found, key=lambda z: bitmap_key(n, z)), truncated)
