import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import bouquet
from gogzeta.gog import (
    GoGPath,
    GoGPrime,
    GraphOfGroups,
    closed_reduced_gog_paths,
    enumerate_gog_closed_reduced,
    enumerate_gog_primes,
    half_edge_matrix,
    is_reduced_gog,
    split_leg,
)
from gogzeta.graph import build_graph, enumerate_primes
from gogzeta.sampling import GogSampler, random_gog
from gogzeta.zeta import trace_powers


def one_leg(charge):
    g = build_graph({"vertices": ["v"], "legs": ["v"]})
    return GraphOfGroups.from_charges(g, [charge])


def test_charges_validated(k4):
    with pytest.raises(ValueError):
        GraphOfGroups.from_charges(k4, [1, 1, 0, 1])
    with pytest.raises(ValueError):
        GraphOfGroups.from_charges(k4, [1, 1])
    with pytest.raises(ValueError):
        GraphOfGroups(k4, ((1,), (0,), (0,), (0,)))


def test_half_edge_matrix_leg():
    assert half_edge_matrix(one_leg(2)).tolist() == [[1]]
    assert half_edge_matrix(one_leg(1)).tolist() == [[0]]


def test_half_edge_matrix_loop():
    x = GraphOfGroups.from_charges(bouquet(1), [3])
    assert half_edge_matrix(x).tolist() == [[3, 2], [2, 3]]


def test_reducedness():
    x = one_leg(2)
    assert not is_reduced_gog(x, GoGPath((0,), (0,)))
    assert is_reduced_gog(x, GoGPath((0,), (1,)))
    assert [p.units for p in closed_reduced_gog_paths(x, 2)] == [((0, 1), (0, 1))]


def test_primes_of_a_charged_leg():
    primes = enumerate_gog_primes(one_leg(2), 4)
    assert primes == [GoGPrime(1, GoGPath((0,), (1,)))]


def test_rotation_and_power():
    p = GoGPath((0, 1, 2), (5, 6, 7))
    assert p.rotate(1).units == ((1, 6), (2, 7), (0, 5))
    assert p.power(2).length == 6
    assert GoGPrime.from_path(p.rotate(2)).path == p


def test_unit_charges_reproduce_graph_primes(k4):
    x = GraphOfGroups.from_charges(k4, [1] * 4)
    assert [p.path.half_edges for p in enumerate_gog_primes(x, 5)] == \
        [p.half_edges for p in enumerate_primes(k4, 5)]


def test_split_leg_layout():
    g = build_graph({"vertices": ["v"], "edges": [["v", "v"]], "legs": ["v"]})
    x = GraphOfGroups.from_charges(g, [3])
    s = split_leg(x, 2)
    assert (s.graph.n, s.graph.k, s.graph.l) == (2, 4, 0)
    assert s.graph.involution[2] == 3 and s.graph.root[3] == 1
    assert s.charges == (3, 2)
    with pytest.raises(ValueError):
        split_leg(x, 0)


gogs = st.integers(0, 10**6).map(lambda s: random_gog(random.Random(s), GogSampler(path_budget=3000, budget_len=6)))


@settings(max_examples=30, deadline=None)
@given(gogs)
def test_counts_agree(x):
    traces = trace_powers(x, 6)
    primes = enumerate_gog_primes(x, 6)
    for n in range(1, 7):
        count = enumerate_gog_closed_reduced(x, n)
        assert count == traces[n - 1]
        assert count == sum(p.length for p in primes if n % p.length == 0)
        if n <= 3:
            assert len(closed_reduced_gog_paths(x, n)) == count
