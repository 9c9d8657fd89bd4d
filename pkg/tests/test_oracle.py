import random

import pytest

from bdm.errors import TooLarge
from bdm.graph import build_graph
from bdm.oracle import equivalence_check, oracle_report, random_instance


def test_p3_report(p3):
    rep = oracle_report(p3)
    assert rep.max_size == 1
    assert len(rep.all_max_matchings) == 2
    assert rep.d_set == {0, 1}
    assert rep.components == [(frozenset({0, 1, 2}), "loose_hooked_a")]
    assert rep.verifying_sets == [frozenset({0, 1})]


def test_isolated_inactive_vertex_is_consistent():
    g = build_graph(1, 0, [], [0])
    assert oracle_report(g).components == [(frozenset({0}), "consistent")]


def test_c4_report(c4):
    rep = oracle_report(c4)
    assert rep.max_size == 2
    assert set(rep.edge_class) == {"flexible"}
    assert rep.d_set == frozenset()
    assert rep.components == [(frozenset(range(4)), "consistent")]
    assert set(rep.verifying_sets) == {frozenset({0, 1}), frozenset({2, 3})}


def test_min_cost_equals_max_size(star, chain):
    for g in (star, chain):
        rep = oracle_report(g)
        assert rep.min_cost == rep.max_size


def test_too_large():
    g = build_graph(5, 4, [(i, j) for i in range(5) for j in range(4)])
    with pytest.raises(TooLarge):
        oracle_report(g)
    with pytest.raises(TooLarge):
        oracle_report(build_graph(2, 1, [(0, 0)]), max_vertices=2)


def test_order_closure_chain(chain):
    rep = oracle_report(chain)
    s = lambda v: frozenset({v})  # noqa: E731
    assert (s(1), s(2)) in rep.order
    assert (s(2), s(1)) not in rep.order


@pytest.mark.parametrize("name", ["p3", "star", "c4", "chain", "single_edge"])
def test_equivalence_fixtures(request, name):
    assert equivalence_check(request.getfixturevalue(name)) is None


def test_units_never_overlap_in_oracle_kinds():
    rng = random.Random(2)
    for _ in range(200):
        rep = oracle_report(random_instance(rng))
        assert not any(k.endswith("_both") for _, k in rep.components)


def test_random_instance_is_seeded():
    a = random_instance(random.Random(5))
    b = random_instance(random.Random(5))
    assert a == b
