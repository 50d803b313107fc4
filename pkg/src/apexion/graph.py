"""Small simple graphs stored as per-vertex bitsets, plus the one-step minor operations."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 31


class GraphError(ValueError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=1 << 16)
def bits_of(mask: int) -> tuple[int, ...]:
    """Set bit positions of ``mask`` in ascending order (memoised)."""
    return tuple(iter_bits(mask))


def _drop_bit(row: int, v: int) -> int:
    # remove bit v and shift the higher bits down by one
    low = row & ((1 << v) - 1)
    return low | ((row >> (v + 1)) << v)


class SmallGraph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``adj[i]`` is an int whose bit ``j`` is set iff ``ij`` is an edge.
    """

    __slots__ = ("order", "adj", "_hash")

    def __init__(self, order: int, adj: Sequence[int], *, check: bool = True):
        if check:
            if not 0 <= order <= MAX_ORDER:
                raise GraphError(f"order {order} outside 0..{MAX_ORDER}")
            if len(adj) != order:
                raise GraphError("adjacency length does not match order")
            full = (1 << order) - 1
            for i, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {i} has bits beyond order")
                if row >> i & 1:
                    raise GraphError(f"loop at vertex {i}")
                for j in iter_bits(row):
                    if not adj[j] >> i & 1:
                        raise GraphError(f"asymmetric edge {i}-{j}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SmallGraph is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge {u}-{v} out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    # -- basic queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def validate(self) -> None:
        """Re-run the structural invariant checks; raises GraphError on failure."""
        SmallGraph(self.order, self.adj, check=True)

    def relabel(self, perm: Sequence[int]) -> SmallGraph:
        """Return the graph with old vertex ``i`` renamed to ``perm[i]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise GraphError("perm is not a permutation of the vertices")
        adj = [0] * n
        for i, row in enumerate(self.adj):
            new = 0
            for j in iter_bits(row):
                new |= 1 << perm[j]
            adj[perm[i]] = new
        return SmallGraph(n, adj, check=False)

    def induced_subgraph(self, vertices: Iterable[int]) -> SmallGraph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            row = 0
            for w in iter_bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            adj[index[v]] = row
        return SmallGraph(len(keep), adj, check=False)

    def complement(self) -> SmallGraph:
        full = (1 << self.order) - 1
        return SmallGraph(self.order, [full & ~row & ~(1 << i) for i, row in enumerate(self.adj)], check=False)

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SmallGraph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"SmallGraph(order={self.order}, size={self.size}, edges={self.edges()})"

    def __reduce__(self):
        return (_rebuild, (self.order, self.adj))


def _rebuild(order, adj):
    return SmallGraph(order, adj, check=False)


# -- minor operations ------------------------------------------------------


def delete_vertex(g: SmallGraph, v: int) -> SmallGraph:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")
    if g.order < 2:
        raise GraphError("cannot delete the only vertex of an order-1 graph")
    adj = [_drop_bit(row, v) for i, row in enumerate(g.adj) if i != v]
    return SmallGraph(g.order - 1, adj, check=False)


def delete_edge(g: SmallGraph, e: tuple[int, int]) -> SmallGraph:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return SmallGraph(g.order, adj, check=False)


def add_edge(g: SmallGraph, e: tuple[int, int]) -> SmallGraph:
    u, v = e
    if u == v or not (0 <= u < g.order and 0 <= v < g.order):
        raise GraphError(f"cannot add edge {u}-{v}")
    if g.adj[u] >> v & 1:
        raise GraphError(f"edge {u}-{v} already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return SmallGraph(g.order, adj, check=False)


def contract_edge(g: SmallGraph, e: tuple[int, int]) -> SmallGraph:
    """Identify the endpoints of ``e``; the merged vertex keeps index ``min(u, v)``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not present")
    if u > v:
        u, v = v, u
    return SmallGraph(g.order - 1, _contract_rows(g.adj, u, v), check=False)


def _contract_rows(adj: Sequence[int], u: int, v: int) -> list[int]:
    # u < v, uv an edge
    bu, bv = 1 << u, 1 << v
    rows = list(adj)
    rows[u] = (rows[u] | rows[v]) & ~(bu | bv)
    for w in iter_bits(adj[v] & ~bu):
        rows[w] |= bu
    del rows[v]
    return [_drop_bit(row, v) for row in rows]


# -- structural queries ----------------------------------------------------


def min_degree(g: SmallGraph) -> int:
    return min((row.bit_count() for row in g.adj), default=0)


def max_degree(g: SmallGraph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def degree_sequence(g: SmallGraph) -> tuple[int, ...]:
    return tuple(sorted((row.bit_count() for row in g.adj), reverse=True))


def components(g: SmallGraph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    remaining = (1 << g.order) - 1
    comps = []
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: SmallGraph) -> bool:
    return g.order > 0 and len(components(g)) == 1


def _connected_within(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= adj[w]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_2_connected(g: SmallGraph) -> bool:
    """Connected, order >= 3, and no cut vertex."""
    n = g.order
    if n < 3:
        return False
    full = (1 << n) - 1
    return all(_connected_within(g.adj, full & ~(1 << v)) for v in range(n)) and is_connected(g)


def triangles(g: SmallGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b in g.edges():
        for c in iter_bits(g.adj[a] & g.adj[b] & ~((1 << (b + 1)) - 1)):
            out.append((a, b, c))
    return out


def degree3_vertices(g: SmallGraph) -> list[int]:
    return [v for v, row in enumerate(g.adj) if row.bit_count() == 3]


# -- named graphs ----------------------------------------------------------


def complete_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> SmallGraph:
    return SmallGraph(n, [0] * n)


def path_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> SmallGraph:
    return SmallGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def complete_multipartite(*parts: int) -> SmallGraph:
    label = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(label)
    return SmallGraph.from_edges(n, ((i, j) for i, j in combinations(range(n), 2) if label[i] != label[j]))


def petersen_graph() -> SmallGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SmallGraph.from_edges(10, outer + spokes + inner)


def prism_graph() -> SmallGraph:
    return SmallGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def icosahedral_graph() -> SmallGraph:
    # top 0, upper ring 1..5, lower ring 6..10, bottom 11
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (lo, lo_next), (11, lo), (up, lo), (up_next, lo)]
    return SmallGraph.from_edges(12, edges)


def cone(g: SmallGraph) -> SmallGraph:
    """Join a new vertex (index ``g.order``) to every vertex of ``g``."""
    n = g.order
    if n + 1 > MAX_ORDER:
        raise GraphError("cone would exceed capacity")
    apex = 1 << n
    return SmallGraph(n + 1, [row | apex for row in g.adj] + [apex - 1], check=False)


def disjoint_union(*graphs: SmallGraph) -> SmallGraph:
    adj: list[int] = []
    for g in graphs:
        shift = len(adj)
        adj.extend(row << shift for row in g.adj)
    return SmallGraph(len(adj), adj)
