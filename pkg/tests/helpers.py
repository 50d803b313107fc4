"""Shared strategies and brute-force oracles for the test suite."""

import itertools

from hypothesis import strategies as st

from apexion.graph import SmallGraph


@st.composite
def graphs(draw, min_order=1, max_order=9, density=None):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    if density is None:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        keep = [draw(st.floats(0, 1)) < density for _ in pairs]
    return SmallGraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def brute_isomorphic(g, h):
    """Permutation search, independent of the canonical labeling code."""
    if g.order != h.order or g.size != h.size:
        return False
    hedges = set(h.edges())
    gedges = g.edges()
    for p in itertools.permutations(range(g.order)):
        if all(tuple(sorted((p[u], p[v]))) in hedges for u, v in gedges):
            return True
    return False


def brute_key(g):
    """Smallest edge bitstring over all relabelings; only for tiny orders."""
    n = g.order
    pairs = list(itertools.combinations(range(n), 2))
    best = None
    for p in itertools.permutations(range(n)):
        bits = tuple(int(g.has_edge(p[a], p[b])) for a, b in pairs)
        if best is None or bits < best:
            best = bits
    return (n, best)
