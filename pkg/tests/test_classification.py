import pytest

from bdm.classification import (
    EdgeClass,
    canonical_verifying_sets,
    classify_edges,
    elementary_components,
    loose_attainable,
)
from bdm.decomposition import decompose
from bdm.errors import InconsistentDecomposition
from bdm.graph import build_graph
from bdm.matching import max_b_matching
from bdm.oracle import oracle_report
from bdm.verifying import is_verifying

F, I, X = EdgeClass.FORBIDDEN, EdgeClass.INEVITABLE, EdgeClass.FLEXIBLE


def _run(g):
    m = max_b_matching(g)
    d = decompose(g, m)
    return m, d, classify_edges(g, m, d)


def test_c4_all_flexible(c4):
    _, _, cls = _run(c4)
    assert cls.classes == (X, X, X, X)
    assert cls.allowed == frozenset(range(4))


def test_chain_classes(chain):
    _, _, cls = _run(chain)
    assert cls.classes == (I, I, F)
    assert cls.edges_of(F) == {2}


def test_single_edge_inevitable(single_edge):
    _, _, cls = _run(single_edge)
    assert cls[0] is I


@pytest.mark.parametrize("name", ["p3", "star", "c4", "chain", "single_edge"])
def test_classes_match_oracle(request, name):
    g = request.getfixturevalue(name)
    _, _, cls = _run(g)
    assert tuple(c.value for c in cls.classes) == oracle_report(g).edge_class


def test_loose_attainable(p3, c4, single_edge):
    assert loose_attainable(_run(p3)[1]) == {0, 1} == oracle_report(p3).d_set
    assert loose_attainable(_run(c4)[1]) == frozenset()
    assert loose_attainable(_run(single_edge)[1]) == {0}


def test_elementary_components(chain, c4):
    assert set(elementary_components(chain, _run(chain)[2])) == {frozenset({0, 2}), frozenset({1, 3})}
    assert elementary_components(c4, _run(c4)[2]) == [frozenset(range(4))]
    g = build_graph(1, 1, [])
    assert set(elementary_components(g, _run(g)[2])) == {frozenset({0}), frozenset({1})}


def test_canonical_sets(p3, single_edge, c4):
    assert canonical_verifying_sets(_run(p3)[1]) == ({0, 1}, {0, 1})
    assert canonical_verifying_sets(_run(single_edge)[1]) == ({0, 1}, {0})
    assert canonical_verifying_sets(_run(c4)[1]) == ({2, 3}, {0, 1})
    for g in (p3, single_edge, c4):
        m, d, _ = _run(g)
        z1, z2 = canonical_verifying_sets(d)
        assert is_verifying(g, z1, m) and is_verifying(g, z2, m)


def test_classify_rejects_foreign_decomposition(p3, c4):
    m, d, _ = _run(p3)
    with pytest.raises(InconsistentDecomposition):
        classify_edges(c4, max_b_matching(c4), d)


def test_flexible_edges_stay_inside_components(star):
    m, d, cls = _run(star)
    for e, (u, v) in enumerate(star.edges):
        assert (cls[e] is X) == (d.comp_of[u] == d.comp_of[v])
