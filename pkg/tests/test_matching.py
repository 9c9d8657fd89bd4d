import pytest

from bdm.errors import NotABMatching, UnknownEdgeId
from bdm.graph import Side, build_graph
from bdm.matching import (
    Matching,
    has_augmenting_path,
    is_b_matching,
    is_maximum,
    loose_vertices,
    max_b_matching,
)
from bdm.oracle import oracle_report


def test_is_b_matching(p3):
    assert is_b_matching(p3, [0])
    assert not is_b_matching(p3, [0, 1])
    assert is_b_matching(p3, [])
    with pytest.raises(UnknownEdgeId):
        is_b_matching(p3, [7])


@pytest.mark.parametrize("name, size", [("p3", 1), ("star", 2), ("c4", 2)])
def test_max_size_matches_oracle(request, name, size):
    g = request.getfixturevalue(name)
    m = max_b_matching(g)
    assert m.is_valid
    assert m.size == size == oracle_report(g).max_size


def test_deterministic(c4):
    assert max_b_matching(c4) == max_b_matching(c4)


def test_loose_vertices(p3, single_edge):
    m = Matching.from_edges(p3, [0])
    assert loose_vertices(p3, m, Side.A) == {1}
    assert loose_vertices(p3, m, Side.B) == frozenset()
    m1 = Matching.from_edges(single_edge, [0])
    assert loose_vertices(single_edge, m1, Side.A) == {0}


def test_loose_vertices_rejects_overloaded(p3):
    with pytest.raises(NotABMatching):
        loose_vertices(p3, Matching.from_edges(p3, [0, 1]), Side.A)


def test_start_matching_is_extended(c4):
    m = max_b_matching(c4, start=Matching.from_edges(c4, [1]))
    assert m.size == 2
    assert 1 in m


def test_start_matching_must_be_valid(p3):
    with pytest.raises(NotABMatching):
        max_b_matching(p3, start=[0, 1])


def test_augmenting_path_detection(c4):
    partial = Matching.from_edges(c4, [1])
    assert has_augmenting_path(c4, partial)
    assert not is_maximum(c4, partial)
    assert is_maximum(c4, max_b_matching(c4))


def test_capacity_above_degree():
    g = build_graph(1, 2, [(0, 0), (0, 1)], [5, 1, 1])
    m = max_b_matching(g)
    assert m.size == 2
    assert m.is_loose(0)


def test_empty_graph():
    g = build_graph(0, 0, [])
    assert max_b_matching(g).size == 0
