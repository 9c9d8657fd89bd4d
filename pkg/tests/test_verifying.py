import pytest

from bdm.decomposition import decompose
from bdm.errors import (
    MalformedSet,
    NotAnIdeal,
    NotMaximumMatching,
    NotNormalized,
    NotVerifying,
    UnknownComponent,
)
from bdm.matching import Matching, max_b_matching
from bdm.oracle import oracle_report
from bdm.verifying import (
    NormalizedIdealPair,
    check_ideal_pair,
    enumerate_verifying_sets,
    ideal_to_verifying,
    is_verifying,
    iter_normalized_lower_ideals,
    verifying_cost,
    verifying_to_ideal,
)


def _d(g):
    return decompose(g, max_b_matching(g))


def _pair(d, lower):
    lower = frozenset(lower)
    return NormalizedIdealPair(lower, frozenset(range(d.k)) - lower)


def test_cost(p3):
    assert verifying_cost(p3, {0, 1}) == 1
    assert verifying_cost(p3, set()) == 3
    assert verifying_cost(p3, range(3)) == 2


def test_is_verifying(p3, c4):
    m = max_b_matching(p3)
    assert is_verifying(p3, {0, 1}, m)
    assert not is_verifying(p3, {2}, m)
    assert is_verifying(c4, {2, 3}, max_b_matching(c4))
    with pytest.raises(NotMaximumMatching):
        is_verifying(c4, {2, 3}, Matching.from_edges(c4, [0]))


def test_chain_ideals(chain):
    d = _d(chain)
    a1, b1 = d.comp_of[1], d.comp_of[3]
    assert ideal_to_verifying(d, _pair(d, {a1, b1})) == {1, 2}
    assert ideal_to_verifying(d, _pair(d, ())) == {2, 3}
    assert ideal_to_verifying(d, _pair(d, range(4))) == {0, 1}


def test_chain_inverse(chain, p3):
    d = _d(chain)
    p = verifying_to_ideal(d, {1, 2})
    assert p.lower == {d.comp_of[1], d.comp_of[3]}
    dp = _d(p3)
    assert verifying_to_ideal(dp, {0, 1}) == NormalizedIdealPair(frozenset({0}), frozenset())
    with pytest.raises(NotVerifying):
        verifying_to_ideal(d, {0, 3})


def test_malformed_before_cost(c4):
    d = _d(c4)
    # splits the single component
    with pytest.raises(MalformedSet):
        verifying_to_ideal(d, {0, 2})


def test_bad_pairs(chain, p3):
    d = _d(chain)
    with pytest.raises(UnknownComponent):
        check_ideal_pair(d, NormalizedIdealPair(frozenset({9}), frozenset()))
    with pytest.raises(NotAnIdeal):
        check_ideal_pair(d, NormalizedIdealPair(frozenset({0}), frozenset({0, 1, 2, 3})))
    # b0 sits on top of the chain; alone it is not a lower ideal
    with pytest.raises(NotAnIdeal):
        ideal_to_verifying(d, _pair(d, {d.comp_of[2]}))
    dp = _d(p3)
    with pytest.raises(NotNormalized):
        ideal_to_verifying(dp, _pair(dp, ()))


def test_enumeration_fixtures(chain, p3, single_edge):
    fam = enumerate_verifying_sets(_d(chain), cap=100)
    assert not fam.truncated
    assert set(fam.sets) == {
        frozenset(s) for s in ({2, 3}, {1, 2, 3}, {1, 2}, {0, 1, 2}, {0, 1})
    }
    assert enumerate_verifying_sets(_d(p3)).sets == [frozenset({0, 1})]
    assert set(enumerate_verifying_sets(_d(single_edge)).sets) == {frozenset({0}), frozenset({0, 1})}


def test_enumeration_sorted_by_bitmap(chain):
    sets = enumerate_verifying_sets(_d(chain)).sets
    keys = [tuple(int(v in z) for v in range(chain.n)) for z in sets]
    assert keys == sorted(keys)


def test_enumeration_cap(chain):
    fam = enumerate_verifying_sets(_d(chain), cap=2)
    assert fam.truncated and len(fam.sets) == 2
    with pytest.raises(ValueError):
        enumerate_verifying_sets(_d(chain), cap=0)


@pytest.mark.parametrize("name", ["p3", "star", "c4", "chain", "single_edge"])
def test_round_trip_and_oracle(request, name):
    g = request.getfixturevalue(name)
    d = _d(g)
    ideals = list(iter_normalized_lower_ideals(d))
    sets = [ideal_to_verifying(d, _pair(d, i)) for i in ideals]
    assert set(sets) == set(oracle_report(g).verifying_sets)
    for lower, z in zip(ideals, sets):
        assert verifying_to_ideal(d, z).lower == lower


def test_edge_transfer_rule(star, chain):
    for g in (star, chain):
        m = max_b_matching(g)
        for z in oracle_report(g).verifying_sets:
            for e, (u, v) in enumerate(g.edges):
                for x, y in ((u, v), (v, u)):
                    if x in z and e not in m:
                        assert y not in z
                    if x not in z and e in m:
                        assert y in z
