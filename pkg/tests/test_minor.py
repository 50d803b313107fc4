import random

import pytest
from hypothesis import given, settings

from apexion.enumeration import EnumSpec, enumerate_all, random_graph
from apexion.graph import (
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    path_graph,
    petersen_graph,
)
from apexion.minor import (
    K3,
    K4,
    K5,
    K6,
    K33,
    BranchDecomposition,
    check_witness,
    has_k6_minor,
    has_minor,
    minor_oracle,
)

from helpers import graphs


def independent_check(g, h, wit):
    """Witness check written against SmallGraph primitives only."""
    sets = [set(s) for s in wit.vertex_sets()]
    if len(sets) != h.order or any(not s for s in sets):
        return False
    if any(a & b for i, a in enumerate(sets) for b in sets[i + 1:]):
        return False
    for s in sets:
        start = next(iter(s))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in s and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != s:
            return False
    return all(any(g.has_edge(x, y) for x in sets[a] for y in sets[b]) for a, b in h.edges())


def test_identity():
    for g in [K4, petersen_graph(), cycle_graph(7)]:
        wit = has_minor(g, g)
        assert wit is not None
        assert all(len(s) == 1 for s in wit.vertex_sets())


def test_petersen_has_k5_not_k6():
    pet = petersen_graph()
    wit = has_minor(pet, K5)
    assert wit is not None and independent_check(pet, K5, wit)
    assert minor_oracle(pet, K5, max_order=10)
    assert has_minor(pet, K6) is None
    assert has_minor(pet, K6, apex_prune=False) is None
    assert not minor_oracle(pet, K6, max_order=10)


def test_oracle_examples():
    assert minor_oracle(K4, K3)
    assert minor_oracle(cycle_graph(5), K3)
    assert minor_oracle(K33, K4)
    assert not minor_oracle(path_graph(5), K3)
    with pytest.raises(ValueError):
        minor_oracle(complete_graph(10), K3)


def test_k6_examples():
    assert has_k6_minor(K6) is not None
    assert has_k6_minor(complete_graph(5)) is None
    assert has_k6_minor(disjoint_union(K5, K5)) is None


def test_pattern_larger_than_host():
    assert has_minor(K3, K4) is None


def test_disconnected_host():
    g = disjoint_union(cycle_graph(4), K5)
    wit = has_minor(g, K5)
    assert wit is not None and independent_check(g, K5, wit)


def test_disconnected_pattern_rejected():
    with pytest.raises(ValueError):
        has_minor(K6, disjoint_union(K3, K3))


def test_checker_rejects_bad_witness():
    bad = BranchDecomposition(((1 << 0) | (1 << 2), 1 << 1, 1 << 3))  # {0,2} is not connected in C4
    assert not check_witness(cycle_graph(4), K3, bad)
    overlapping = BranchDecomposition((0b11, 0b10, 0b100))
    assert not check_witness(K4, K3, overlapping)


@pytest.mark.parametrize("h", [K3, K4, K5, K33], ids=["K3", "K4", "K5", "K33"])
def test_agrees_with_oracle_up_to_order_6(h):
    memo = {}
    for n in range(1, 7):
        for g in enumerate_all(EnumSpec(n)):
            wit = has_minor(g, h)
            assert (wit is not None) == minor_oracle(g, h, memo=memo)
            if wit is not None:
                assert independent_check(g, h, wit)


@settings(max_examples=40)
@given(graphs(min_order=6, max_order=11, density=0.55))
def test_witnesses_valid(g):
    for h in (K5, K6, K33):
        wit = has_minor(g, h)
        if wit is not None:
            assert check_witness(g, h, wit) and independent_check(g, h, wit)


@settings(max_examples=40)
@given(graphs(min_order=6, max_order=10, density=0.6))
def test_k6_monotone(g):
    found = has_k6_minor(g) is not None
    for e in g.edges()[:6]:
        for minor in (delete_edge(g, e), contract_edge(g, e)):
            if has_k6_minor(minor) is not None:
                assert found


@settings(max_examples=25)
@given(graphs(min_order=6, max_order=8, density=0.6))
def test_prune_does_not_change_answer(g):
    assert (has_k6_minor(g) is None) == (has_minor(g, K6, apex_prune=False) is None)


def test_dense_random_graphs_have_k6():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(6, 13)
        g = random_graph(n, 4 * n - 9, rng.randrange(2**32))
        wit = has_k6_minor(g)
        assert wit is not None and independent_check(g, K6, wit)


def test_order13_43_edges():
    for s in range(20):
        g = random_graph(13, 43, s)
        assert has_k6_minor(g) is not None
