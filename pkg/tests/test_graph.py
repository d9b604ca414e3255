import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import bouquet, dipole
from gogzeta.graph import (
    EnumerationTooLarge,
    Graph,
    GraphPrime,
    GraphValidationError,
    adjacency_matrix,
    build_graph,
    canonical_rotation,
    enumerate_closed_reduced_paths,
    enumerate_primes,
    is_reduced,
    minimal_period,
    to_description,
    valency_matrix,
)
from gogzeta.sampling import _random_connected


def test_counts(k4, two_legs):
    f1 = bouquet(1)
    assert (f1.k, f1.l, f1.b1) == (2, 0, 1)
    assert (two_legs.k, two_legs.l, two_legs.b1) == (2, 2, 0)
    assert (k4.n, k4.m, k4.k, k4.b1) == (4, 6, 12, 3)


def test_half_edge_layout(k4):
    assert k4.root[:4] == (0, 1, 0, 2)
    assert k4.involution[:4] == (1, 0, 3, 2)
    assert to_description(k4)["edges"][0] == ["1", "2"]


@pytest.mark.parametrize("desc, msg", [
    ({"vertices": ["a", "b"]}, "disconnected"),
    ({"vertices": ["a"], "edges": [["a", "z"]]}, "unknown vertex"),
    ({"vertices": ["a", "a"]}, "duplicate"),
])
def test_bad_descriptions(desc, msg):
    with pytest.raises(GraphValidationError, match=msg):
        build_graph(desc)


def test_bad_involution():
    with pytest.raises(GraphValidationError, match="self-inverse"):
        Graph((0, 0, 0), (1, 2, 0), ("v",))
    with pytest.raises(GraphValidationError, match="dangling"):
        Graph((0, 3), (1, 0), ("v",))


def test_matrices(k4, two_legs):
    assert adjacency_matrix(dipole(2)).tolist() == [[0, 2], [2, 0]]
    assert adjacency_matrix(two_legs).tolist() == [[2]]
    assert adjacency_matrix(k4).tolist() == (np.ones((4, 4), int) - np.eye(4, dtype=int)).tolist()
    assert valency_matrix(dipole(2)).tolist() == [[2, 0], [0, 2]]
    assert adjacency_matrix(bouquet(2)).tolist() == [[4]]


def test_closed_path_counts(k4, two_legs):
    assert enumerate_closed_reduced_paths(two_legs, 2) == 2
    assert enumerate_closed_reduced_paths(bouquet(1), 1) == 2
    assert enumerate_closed_reduced_paths(k4, 3) == 24
    assert enumerate_closed_reduced_paths(k4, 4) == 24


def test_primes(k4, two_legs):
    lengths = Counter(p.length for p in enumerate_primes(k4, 5))
    assert lengths == {3: 8, 4: 6}
    assert [p.length for p in enumerate_primes(two_legs, 4)] == [2]
    assert len(enumerate_primes(bouquet(1), 1)) == 2


def test_guard(k4):
    with pytest.raises(EnumerationTooLarge):
        enumerate_primes(k4, 30)
    with pytest.raises(ValueError):
        enumerate_closed_reduced_paths(k4, 0)


def test_rotation_helpers():
    assert minimal_period((1, 2, 1, 2)) == 2
    assert canonical_rotation((3, 1, 2)) == (1, 2, 3)
    assert not is_reduced(bouquet(1), (0, 1))


def _small_graph(seed: int):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    return _random_connected(rng, n, rng.randint(max(n - 1, 1), 4), rng.randint(0, 2))


graphs = st.integers(0, 10**6).map(_small_graph)


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_paths_are_rotations_of_primes(g):
    primes = enumerate_primes(g, 6)
    for n in range(1, 7):
        expected = sum(p.length for p in primes if n % p.length == 0)
        assert enumerate_closed_reduced_paths(g, n) == expected


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_reversal_is_an_involution(g):
    primes = set(enumerate_primes(g, 6))
    for p in primes:
        r = p.reversed(g)
        assert r in primes and r.length == p.length and r.reversed(g) == p


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_row_sums_are_valencies(g):
    assert adjacency_matrix(g).sum(axis=1).tolist() == np.diag(valency_matrix(g)).tolist()
