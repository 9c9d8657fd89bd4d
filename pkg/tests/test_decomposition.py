import pytest

from bdm.classification import classify_edges
from bdm.decomposition import (
    CLOSURE_LIMIT,
    ComponentKind,
    build_aux,
    decompose,
    inconsistent_unit,
    poset_leq,
    restricted_capacity,
    strongly_connected_components,
    transitive_reduction,
)
from bdm.errors import (
    NotABMatching,
    NotMaximumMatching,
    RequiresEdgeClassification,
    UnknownComponent,
)
from bdm.graph import Side, build_graph
from bdm.matching import Matching, max_b_matching
from bdm.oracle import oracle_report


def _by_vertices(d):
    return {c.vertex_set: c for c in d.components}


def test_aux_p3(p3):
    m = Matching.from_edges(p3, [0])
    aux = build_aux(p3, Side.A, m)
    assert set(aux.arcs) == {(2, 0), (1, 2)}


def test_aux_c4_reverse_is_a_cycle(c4):
    # matched a0b0 and a1b1
    m = Matching.from_edges(c4, [0, 3])
    aux = build_aux(c4, Side.B, m)
    assert set(aux.arcs) == {(0, 2), (1, 3), (3, 0), (2, 1)}
    cond = strongly_connected_components(aux)
    assert len(cond.components) == 1


def test_aux_no_edges():
    g = build_graph(2, 1, [])
    assert build_aux(g, Side.A, max_b_matching(g)).arcs == ()


def test_aux_restrict(p3):
    m = Matching.from_edges(p3, [0])
    assert build_aux(p3, Side.A, m, restrict={0, 2}).arcs == ((2, 0),)


def test_scc_chain_and_empty(chain):
    m = max_b_matching(chain)
    cond = strongly_connected_components(build_aux(chain, Side.B, m))
    assert len(cond.components) == 4
    assert len(cond.arcs) == 3
    assert cond.components[0] == [0]
    g = build_graph(3, 0, [])
    empty = strongly_connected_components(build_aux(g, Side.A, max_b_matching(g)))
    assert len(empty.components) == 3 and empty.arcs == []


def test_inconsistent_units(p3, c4):
    m = max_b_matching(p3)
    assert inconsistent_unit(p3, m, Side.A) == {0, 1, 2}
    assert inconsistent_unit(p3, m, Side.B) == frozenset()
    mc = max_b_matching(c4)
    assert inconsistent_unit(c4, mc, Side.A) == inconsistent_unit(c4, mc, Side.B) == frozenset()


def test_inconsistent_unit_inactive_middle():
    g = build_graph(2, 1, [(0, 0), (1, 0)], [1, 1, 0])
    m = max_b_matching(g)
    assert m.size == 0
    assert inconsistent_unit(g, m, Side.A) == {0, 1, 2}
    d = decompose(g, m)
    kinds = {c.vertex_set: c.kind for c in d.components}
    assert kinds[frozenset({2})] is ComponentKind.INACTIVE_HOOKED_A
    assert kinds[frozenset({0})] is ComponentKind.LOOSE_HOOKED_A


def test_decompose_p3(p3):
    d = decompose(p3, max_b_matching(p3))
    assert d.k == 1
    (c,) = d.components
    assert c.vertex_set == {0, 1, 2}
    assert c.kind is ComponentKind.LOOSE_HOOKED_A
    assert not c.trivial
    assert list(d.order_arcs) == []
    assert d.ext_a == {0, 1, 2} and d.ext_b == frozenset()


def test_decompose_chain(chain):
    d = decompose(chain, max_b_matching(chain))
    comps = _by_vertices(d)
    assert set(comps) == {frozenset({v}) for v in range(4)}
    assert all(c.kind is ComponentKind.CONSISTENT for c in d.components)
    cid = {v: d.comp_of[v] for v in range(4)}
    # a1 <= b1 <= a0 <= b0
    seq = [cid[1], cid[3], cid[0], cid[2]]
    for i in range(4):
        for j in range(4):
            assert poset_leq(d, seq[i], seq[j]) == (i <= j)
    assert sorted(transitive_reduction(d)) == sorted(zip(seq, seq[1:]))


def test_decompose_single_edge(single_edge):
    d = decompose(single_edge, max_b_matching(single_edge))
    comps = _by_vertices(d)
    a, b = comps[frozenset({0})], comps[frozenset({1})]
    assert a.kind is ComponentKind.LOOSE_HOOKED_A
    assert b.kind is ComponentKind.CONSISTENT
    assert poset_leq(d, a.id, b.id) and not poset_leq(d, b.id, a.id)


def test_component_ids_follow_smallest_vertex(chain, star):
    for g in (chain, star):
        d = decompose(g, max_b_matching(g))
        firsts = [min(c.vertices) for c in d.components]
        assert firsts == sorted(firsts)
        assert all(d.comp_of[v] == c.id for c in d.components for v in c.vertices)


def test_rejects_non_maximum(c4):
    with pytest.raises(NotMaximumMatching):
        decompose(c4, Matching.from_edges(c4, [1]))


def test_rejects_overloaded(p3):
    with pytest.raises(NotABMatching):
        decompose(p3, Matching.from_edges(p3, [0, 1]))


def test_unknown_component(p3):
    d = decompose(p3, max_b_matching(p3))
    with pytest.raises(UnknownComponent):
        poset_leq(d, 0, 3)
    with pytest.raises(UnknownComponent):
        d.component(-1)


def test_restricted_capacity(single_edge, c4, chain):
    for g, pick, expected in [
        (single_edge, 1, {1: 0}),
        (chain, 3, {3: 0}),
    ]:
        m = max_b_matching(g)
        d = decompose(g, m)
        cls = classify_edges(g, m, d)
        assert restricted_capacity(d, d.comp_of[pick], cls) == expected
    m = max_b_matching(c4)
    d = decompose(c4, m)
    assert restricted_capacity(d, 0, classify_edges(c4, m, d)) == {v: 1 for v in range(4)}
    with pytest.raises(RequiresEdgeClassification):
        restricted_capacity(d, 0, None)


def test_tight_component_gets_perfect_restricted_matching(star):
    m = max_b_matching(star)
    d = decompose(star, m)
    cls = classify_edges(star, m, d)
    for c in d.components:
        if c.kind.hooked_side is not None:
            continue
        bc = restricted_capacity(d, c.id, cls)
        inside = [e for e, (u, v) in enumerate(star.edges) if u in c.vertices and v in c.vertices]
        load = {v: sum(1 for e in inside if e in m and v in star.edges[e]) for v in c.vertices}
        assert load == bc


def test_lazy_order_queries_match_closure(monkeypatch, chain):
    d = decompose(chain, max_b_matching(chain))
    eager = {(i, j) for i in range(d.k) for j in range(d.k) if poset_leq(d, i, j)}
    import bdm.decomposition as mod

    monkeypatch.setattr(mod, "CLOSURE_LIMIT", 0)
    lazy = {(i, j) for i in range(d.k) for j in range(d.k) if poset_leq(d, i, j)}
    assert eager == lazy == set(d.closure_pairs())
    assert CLOSURE_LIMIT > 0


def test_components_match_oracle_fixtures(p3, star, c4, chain, single_edge):
    for g in (p3, star, c4, chain, single_edge):
        d = decompose(g, max_b_matching(g))
        rep = oracle_report(g)
        assert {c.vertex_set: c.kind.value for c in d.components} == rep.kinds


def test_component_table_is_a_sequence(c4):
    d = decompose(c4, max_b_matching(c4))
    assert len(d.components) == 1
    assert d.components[-1] == d.components[0]
    assert d.components[0:1] == [d.components[0]]
    with pytest.raises(IndexError):
        d.components[1]


def test_kind_helpers():
    assert ComponentKind.LOOSE_HOOKED_A.swapped() is ComponentKind.LOOSE_HOOKED_B
    assert ComponentKind.INACTIVE_HOOKED_B.inactive
    assert ComponentKind.LOOSE_HOOKED_B.loose
    assert ComponentKind.CONSISTENT.hooked_side is None
    assert ComponentKind.INACTIVE_HOOKED_A.hooked_side is Side.A
