"""Delta-wye and wye-delta moves and closure of a graph set under them."""

from __future__ import annotations

from typing import Iterable

from .canon import DedupStore, canonical_form
from .graph import MAX_ORDER, GraphError, SmallGraph, _drop_bit, degree3_vertices, triangles


def delta_wye(g: SmallGraph, triangle: tuple[int, int, int]) -> SmallGraph:
    """Replace triangle ``abc`` by a new vertex (index ``g.order``) joined to a, b, c."""
    a, b, c = triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise GraphError(f"{triangle} is not a triangle")
    if g.order + 1 > MAX_ORDER:
        raise GraphError("delta-wye would exceed capacity")
    n = g.order
    tri = (1 << a) | (1 << b) | (1 << c)
    adj = list(g.adj)
    for x in (a, b, c):
        adj[x] = (adj[x] & ~tri) | (1 << n)
    adj.append(tri)
    out = SmallGraph(n + 1, adj, check=False)
    assert out.size == g.size
    return out


def wye_delta(g: SmallGraph, v: int) -> SmallGraph:
    """Delete degree-3 vertex ``v`` and join its neighbours pairwise (existing edges collapse)."""
    if not 0 <= v < g.order or g.degree(v) != 3:
        raise GraphError(f"vertex {v} does not have degree 3")
    nb = g.adj[v]
    adj = list(g.adj)
    for x in g.neighbors(v):
        adj[x] = (adj[x] | nb) & ~(1 << x) & ~(1 << v)
    del adj[v]
    return SmallGraph(g.order - 1, [_drop_bit(r, v) for r in adj], check=False)


def dy_neighbours(g: SmallGraph, *, size_preserving: bool = True) -> list[SmallGraph]:
    out = []
    if g.order < MAX_ORDER:
        out.extend(delta_wye(g, t) for t in triangles(g))
    for v in degree3_vertices(g):
        h = wye_delta(g, v)
        if size_preserving and h.size != g.size:
            continue
        out.append(h)
    return out


def dy_closure(
    seeds: Iterable[SmallGraph],
    order_cap: int = MAX_ORDER,
    size_cap: int | None = None,
    *,
    size_preserving: bool = True,
) -> list[SmallGraph]:
    """Breadth-first closure of ``seeds`` under both moves, one graph per isomorphism class.

    Graphs beyond ``order_cap`` vertices or ``size_cap`` edges are neither kept
    nor expanded. By default wye-delta moves that would collapse onto an
    existing edge are skipped, so every member keeps the seeds' sizes.
    Output is sorted by canonical key.
    """
    store = DedupStore()

    def admissible(g: SmallGraph) -> bool:
        return g.order <= order_cap and (size_cap is None or g.size <= size_cap)

    frontier = []
    for g in seeds:
        if admissible(g) and store.add(g):
            frontier.append(g)
    while frontier:
        nxt = []
        for g in frontier:
            for h in dy_neighbours(g, size_preserving=size_preserving):
                if admissible(h):
                    key = canonical_form(h)
                    if store.add(h, key):
                        nxt.append(h)
        frontier = nxt
    return store.graphs()


def petersen_family() -> list[SmallGraph]:
    from .graph import complete_graph

    return dy_closure([complete_graph(6)])
