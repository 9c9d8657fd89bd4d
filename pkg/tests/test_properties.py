from hypothesis import given, settings
from hypothesis import strategies as st

from bdm.classification import EdgeClass, classify_edges, loose_attainable
from bdm.decomposition import ComponentKind, decompose
from bdm.graph import build_graph
from bdm.matching import has_augmenting_path, max_b_matching
from bdm.oracle import oracle_report
from bdm.pipeline import run_pipeline
from bdm.serialize import DecompositionDocument


@st.composite
def graphs(draw, max_side=4, max_cap=3):
    n_a = draw(st.integers(0, max_side))
    n_b = draw(st.integers(0, max_side))
    pairs = [(i, j) for i in range(n_a) for j in range(n_b)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    caps = draw(st.lists(st.integers(0, max_cap), min_size=n_a + n_b, max_size=n_a + n_b))
    return build_graph(n_a, n_b, edges, caps)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_solver_is_maximum(g):
    m = max_b_matching(g)
    assert m.is_valid
    assert not has_augmenting_path(g, m)
    assert m.size == oracle_report(g).max_size


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_decomposition_invariants(g):
    m = max_b_matching(g)
    d = decompose(g, m)
    seen = [v for c in d.components for v in c.vertices]
    assert sorted(seen) == list(range(g.n))
    assert not d.ext_a & d.ext_b
    for c in d.components:
        side = c.kind.hooked_side
        if side is not None:
            unit = d.ext_a if c.kind in (ComponentKind.LOOSE_HOOKED_A, ComponentKind.INACTIVE_HOOKED_A) else d.ext_b
            assert c.vertex_set <= unit
        if c.kind.inactive:
            assert c.trivial and g.cap[c.vertices[0]] == 0
        if c.kind.loose:
            d_set = loose_attainable(d)
            own = range(g.n_a) if c.kind is ComponentKind.LOOSE_HOOKED_A else range(g.n_a, g.n)
            assert any(v in d_set for v in c.vertices if v in own)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_loose_components_of_one_side_share_no_edge(g):
    d = decompose(g, max_b_matching(g))
    for u, v in g.edges:
        cu, cv = d.components[d.comp_of[u]], d.components[d.comp_of[v]]
        if cu.id != cv.id and cu.kind.loose and cv.kind.loose:
            assert cu.kind is not cv.kind


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_verifying_sets_never_split_a_component(g):
    d = decompose(g, max_b_matching(g))
    for z in oracle_report(g).verifying_sets:
        for c in d.components:
            a_part = [v in z for v in c.vertices if v < g.n_a]
            b_part = [v in z for v in c.vertices if v >= g.n_a]
            assert (all(a_part) and not any(b_part)) or (not any(a_part) and all(b_part))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_classes_partition_edges(g):
    m = max_b_matching(g)
    d = decompose(g, m)
    cls = classify_edges(g, m, d)
    assert len(cls.classes) == g.m
    for e in range(g.m):
        assert (cls[e] is EdgeClass.INEVITABLE) <= (e in m)
        assert (cls[e] is EdgeClass.FORBIDDEN) <= (e not in m)


@settings(max_examples=100, deadline=None)
@given(graphs(max_side=6))
def test_document_round_trip(g):
    doc = DecompositionDocument.from_result(run_pipeline(g))
    text = doc.to_json()
    again = DecompositionDocument.from_json(text)
    assert again == doc
    assert again.to_json() == text


@settings(max_examples=100, deadline=None)
@given(graphs(max_side=6), st.booleans())
def test_dot_is_acyclic(g, reduce):
    import re

    from bdm.serialize import to_dot

    text = to_dot(run_pipeline(g), reduce=reduce)
    arcs = [tuple(map(int, m)) for m in re.findall(r"C(\d+) -> C(\d+);", text)]
    k = len(re.findall(r"\[label=", text))
    indeg = [0] * k
    for _, t in arcs:
        indeg[t] += 1
    ready = [c for c in range(k) if indeg[c] == 0]
    done = 0
    while ready:
        c = ready.pop()
        done += 1
        for s, t in arcs:
            if s == c:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    assert done == k
