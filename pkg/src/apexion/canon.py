"""Canonical labeling and isomorphism dedup.

The canonical labeling is found by equitable colour refinement followed by an
individualise-and-refine search tree. Each leaf is a discrete ordered partition,
which gives a relabeling. The canonical labeling is the leaf whose relabeled
adjacency rows are lexicographically least. Subtrees are skipped when an
automorphism already found (or a twin swap) maps them onto a subtree that has
been explored.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import SmallGraph, bits_of
from .graph6 import encode


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Split cells until every vertex in a cell sees each cell the same number of times."""
    while True:
        new_cells: list[int] = []
        for cell in cells:
            if not cell & (cell - 1):
                new_cells.append(cell)
                continue
            groups: dict[tuple, int] = {}
            for v in bits_of(cell):
                a = adj[v]
                sig = tuple([(a & c).bit_count() for c in cells])
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                new_cells.extend(groups[s] for s in sorted(groups))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _initial_cells(adj: Sequence[int]) -> list[int]:
    by_degree: dict[int, int] = {}
    for v, row in enumerate(adj):
        d = row.bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << v)
    return [by_degree[d] for d in sorted(by_degree)]


def _leaf_code(adj: Sequence[int], cells: list[int]) -> tuple[tuple[int, ...], list[int]]:
    order = [c.bit_length() - 1 for c in cells]
    pos = [0] * len(order)
    for k, v in enumerate(order):
        pos[v] = k
    rows = []
    for v in order:
        r = 0
        for w in bits_of(adj[v]):
            r |= 1 << pos[w]
        rows.append(r)
    return tuple(rows), order


def _twin_generators(adj: Sequence[int], n: int) -> list[list[int]]:
    gens = []
    for cls in _twin_classes(adj, n):
        rep = cls[0]
        for w in cls[1:]:
            perm = list(range(n))
            perm[rep], perm[w] = w, rep
            gens.append(perm)
    return gens


def _twin_classes(adj: Sequence[int], n: int) -> list[list[int]]:
    open_cls: dict[int, list[int]] = {}
    closed_cls: dict[int, list[int]] = {}
    for v in range(n):
        open_cls.setdefault(adj[v], []).append(v)
        closed_cls.setdefault(adj[v] | (1 << v), []).append(v)
    return [c for c in open_cls.values() if len(c) > 1] + [c for c in closed_cls.values() if len(c) > 1]


class _Search:
    __slots__ = ("adj", "n", "best", "best_order", "autos")

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = _twin_generators(adj, n)

    def run(self, cells: list[int], fixed: list[int]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            code, order = _leaf_code(self.adj, cells)
            if self.best is None or code < self.best:
                self.best, self.best_order = code, order
            elif code == self.best:
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.autos.append(perm)
            return
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        tried: list[int] = []
        for v in bits_of(target):
            if tried and self._same_orbit(v, tried, fixed):
                continue
            tried.append(v)
            bit = 1 << v
            child = cells[:idx] + [bit, target & ~bit] + cells[idx + 1:]
            self.run(child, fixed + [v])

    def _same_orbit(self, v: int, tried: list[int], fixed: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[f] == f for f in fixed)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for a, b in enumerate(p):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(t) == rv for t in tried)


def _best_leaf(g: SmallGraph) -> _Search:
    search = _Search(g.adj, g.order)
    search.run(_initial_cells(g.adj), [])
    return search


def canonical_labeling(g: SmallGraph) -> list[int]:
    """Return ``order`` with ``order[k]`` = original vertex placed at position ``k``."""
    if g.order == 0:
        return []
    return list(_best_leaf(g).best_order)


def canonical_graph(g: SmallGraph) -> SmallGraph:
    order = canonical_labeling(g)
    perm = [0] * g.order
    for k, v in enumerate(order):
        perm[v] = k
    return g.relabel(perm)


def canonical_form(g: SmallGraph) -> bytes:
    """Byte key that is equal for two graphs exactly when they are isomorphic."""
    if g.order == 0:
        return encode(g)
    return encode(SmallGraph(g.order, _best_leaf(g).best, check=False))


def are_isomorphic(g1: SmallGraph, g2: SmallGraph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


class DedupStore:
    """Keyed set of graphs by canonical form; shards built separately can be merged."""

    def __init__(self):
        self._items: dict[bytes, SmallGraph] = {}

    def add(self, g: SmallGraph, key: bytes | None = None) -> bool:
        if key is None:
            key = canonical_form(g)
        if key in self._items:
            return False
        self._items[key] = g
        return True

    def __contains__(self, key: bytes) -> bool:
        return key in self._items

    def __len__(self) -> int:
        return len(self._items)

    def merge(self, other: DedupStore) -> None:
        for key, g in other._items.items():
            self._items.setdefault(key, g)

    def keys(self) -> list[bytes]:
        return sorted(self._items)

    def graphs(self) -> list[SmallGraph]:
        """Representatives sorted by canonical key."""
        return [self._items[k] for k in sorted(self._items)]


def dedup(graphs: Iterable[SmallGraph]) -> list[SmallGraph]:
    """One representative per isomorphism class (the first seen), ordered by canonical key."""
    store = DedupStore()
    for g in graphs:
        store.add(g)
    return store.graphs()
