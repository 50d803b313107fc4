import pytest
from hypothesis import given, settings

from apexion.canon import are_isomorphic, canonical_form
from apexion.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    petersen_graph,
    triangles,
)
from apexion.transforms import delta_wye, dy_closure, petersen_family, wye_delta

from helpers import brute_isomorphic, graphs


def test_delta_wye_examples():
    g = delta_wye(complete_graph(4), (0, 1, 2))
    assert (g.order, g.size) == (5, 6)
    k = delta_wye(complete_graph(6), (0, 1, 2))
    assert (k.order, k.size) == (7, 15)
    # the new vertex has degree 3, so this is the other order-7 family member, not K3,3,1
    assert sorted(k.degrees()) == [3, 4, 4, 4, 5, 5, 5]
    assert not brute_isomorphic(k, complete_multipartite(3, 3, 1))
    fam = petersen_family()
    assert any(brute_isomorphic(k, f) for f in fam)
    assert any(brute_isomorphic(complete_multipartite(3, 3, 1), f) for f in fam)
    assert brute_isomorphic(delta_wye(complete_graph(3), (0, 1, 2)), complete_bipartite(1, 3))


def test_delta_wye_rejects_non_triangle():
    with pytest.raises(GraphError):
        delta_wye(cycle_graph(4), (0, 1, 2))


def test_wye_delta_examples():
    star = complete_bipartite(1, 3)
    assert brute_isomorphic(wye_delta(star, 0), complete_graph(3))
    p = wye_delta(petersen_graph(), 0)
    assert (p.order, p.size) == (9, 15)
    k = wye_delta(complete_graph(4), 0)
    assert k == complete_graph(3)
    with pytest.raises(GraphError):
        wye_delta(complete_graph(5), 0)


@settings(max_examples=40)
@given(graphs(min_order=3, max_order=10, density=0.5))
def test_round_trip(g):
    for t in triangles(g)[:5]:
        h = delta_wye(g, t)
        assert h.size == g.size and h.order == g.order + 1
        assert wye_delta(h, g.order) == g


def test_closures():
    assert [canonical_form(g) for g in dy_closure([complete_graph(3)])] == sorted(
        [canonical_form(complete_graph(3)), canonical_form(complete_bipartite(1, 3))]
    )
    assert dy_closure([]) == []


def test_petersen_family():
    fam = dy_closure([complete_graph(6)])
    assert len(fam) == 7
    assert all(g.size == 15 for g in fam)
    assert sorted(g.order for g in fam) == [6, 7, 7, 8, 8, 9, 10]
    assert any(are_isomorphic(g, petersen_graph()) for g in fam)
    assert fam == petersen_family()
    keys = [canonical_form(g) for g in fam]
    assert keys == sorted(keys)


def test_caps():
    assert len(dy_closure([complete_graph(6)], order_cap=8)) == 5
    assert len(dy_closure([complete_graph(6)], order_cap=6)) == 1


def test_collapse_mode_is_superset():
    strict = {canonical_form(g) for g in dy_closure([complete_graph(4)], order_cap=7)}
    loose = {canonical_form(g) for g in dy_closure([complete_graph(4)], order_cap=7, size_preserving=False)}
    assert strict < loose
