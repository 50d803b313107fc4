"""Exhaustive generation of small graphs up to isomorphism, and seeded random samplers.

Exhaustive generation walks the graphs of a fixed order one size layer at a
time. Each layer is built from the previous one by adding (or removing) a
single edge in every possible way and keeping one graph per canonical form.
Minimum degree and connectivity are both preserved by adding edges, so when
either constraint is present the walk can go downward from the complete graph,
discarding violators as it goes, and still reach every qualifying graph.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import canonical_form
from .graph import GraphError, SmallGraph, is_2_connected, is_connected, iter_bits

EXHAUSTIVE_MAX_ORDER = 10


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    order: int
    min_size: int = 0
    max_size: int | None = None
    min_degree: int = 0
    connected_only: bool = False

    def __post_init__(self):
        full = self.order * (self.order - 1) // 2
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.max_size is not None and self.max_size > full:
            object.__setattr__(self, "max_size", full)
        if self.min_degree < 0 or self.min_size < 0:
            raise ValueError("negative bound")

    @property
    def size_range(self) -> tuple[int, int]:
        full = self.order * (self.order - 1) // 2
        lo = max(self.min_size, math.ceil(self.min_degree * self.order / 2))
        if self.connected_only:
            lo = max(lo, self.order - 1)
        hi = full if self.max_size is None else self.max_size
        return lo, hi

    def accepts(self, g: SmallGraph) -> bool:
        lo, hi = self.size_range
        if not lo <= g.size <= hi:
            return False
        if g.order and min(g.degrees()) < self.min_degree:
            return False
        return not self.connected_only or is_connected(g)


def _layer_down(layer: dict[bytes, SmallGraph], spec: EnumSpec) -> dict[bytes, SmallGraph]:
    d = spec.min_degree
    out: dict[bytes, SmallGraph] = {}
    for key in sorted(layer):
        g = layer[key]
        adj = g.adj
        for u, v in g.edges():
            if adj[u].bit_count() <= d or adj[v].bit_count() <= d:
                continue
            rows = list(adj)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            child = SmallGraph(g.order, rows, check=False)
            if spec.connected_only and not is_connected(child):
                continue
            ck = canonical_form(child)
            if ck not in out:
                out[ck] = child
    return out


def _layer_up(layer: dict[bytes, SmallGraph]) -> dict[bytes, SmallGraph]:
    out: dict[bytes, SmallGraph] = {}
    for key in sorted(layer):
        g = layer[key]
        n = g.order
        full = (1 << n) - 1
        for u in range(n):
            for v in iter_bits(full & ~g.adj[u] & ~((1 << (u + 1)) - 1)):
                rows = list(g.adj)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                child = SmallGraph(n, rows, check=False)
                ck = canonical_form(child)
                if ck not in out:
                    out[ck] = child
    return out


def enumerate_layers(spec: EnumSpec, *, max_order: int = EXHAUSTIVE_MAX_ORDER) -> Iterator[tuple[int, list[SmallGraph]]]:
    """Yield ``(size, graphs)`` for each size in range, graphs sorted by canonical key."""
    n = spec.order
    if n > max_order:
        raise BudgetError(f"exhaustive generation is capped at order {max_order}, got {n}")
    lo, hi = spec.size_range
    if lo > hi:
        return
    full = n * (n - 1) // 2
    downward = (spec.min_degree > 0 or spec.connected_only) and full - lo < hi
    if downward:
        top = SmallGraph.from_edges(n, combinations(range(n), 2))
        layer = {canonical_form(top): top}
        found = []
        for size in range(full, lo - 1, -1):
            if size <= hi:
                found.append((size, [layer[k] for k in sorted(layer)]))
            if size > lo:
                layer = _layer_down(layer, spec)
        yield from reversed(found)
    else:
        bottom = SmallGraph(n, [0] * n, check=False)
        layer = {canonical_form(bottom): bottom}
        for size in range(0, hi + 1):
            if size >= lo:
                yield size, [layer[k] for k in sorted(layer) if spec.accepts(layer[k])]
            if size < hi:
                layer = _layer_up(layer)


def enumerate_all(spec: EnumSpec, *, max_order: int = EXHAUSTIVE_MAX_ORDER) -> Iterator[SmallGraph]:
    """One graph per isomorphism class meeting ``spec``, by size then canonical key."""
    for _, graphs in enumerate_layers(spec, max_order=max_order):
        yield from graphs


# -- random samplers ---------------------------------------------------------


def random_graph(n: int, e: int, seed: int | None = None) -> SmallGraph:
    """Uniform labelled graph with ``n`` vertices and ``e`` edges."""
    pairs = list(combinations(range(n), 2))
    if not 0 <= e <= len(pairs):
        raise GraphError(f"cannot place {e} edges on {n} vertices")
    rng = random.Random(seed)
    return SmallGraph.from_edges(n, rng.sample(pairs, e))


def _circulant_regular(n: int, d: int) -> list[int]:
    adj = [0] * n
    for i in range(n):
        for s in range(1, d // 2 + 1):
            for j in ((i + s) % n, (i - s) % n):
                adj[i] |= 1 << j
        if d % 2:
            adj[i] |= 1 << ((i + n // 2) % n)
    return adj


def random_regular(n: int, d: int, seed: int | None = None, *, swaps_per_edge_end: int = 100) -> SmallGraph:
    """``d``-regular graph from a circulant start mixed by ``100*n*d`` double-edge swaps.

    Not exactly uniform over labelled d-regular graphs.
    """
    if not 0 <= d < n or (n * d) % 2:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    adj = _circulant_regular(n, d)
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u]) if u < v]
    for _ in range(swaps_per_edge_end * n * d):
        if len(edges) < 2:
            break
        i, j = rng.randrange(len(edges)), rng.randrange(len(edges))
        if i == j:
            continue
        a, b = edges[i]
        c, x = edges[j]
        if rng.random() < 0.5:
            c, x = x, c
        # a-b, c-x  ->  a-x, c-b
        if len({a, b, c, x}) < 4 or adj[a] >> x & 1 or adj[c] >> b & 1:
            continue
        adj[a] ^= (1 << b) | (1 << x)
        adj[b] ^= (1 << a) | (1 << c)
        adj[c] ^= (1 << x) | (1 << b)
        adj[x] ^= (1 << c) | (1 << a)
        edges[i] = (min(a, x), max(a, x))
        edges[j] = (min(c, b), max(c, b))
    return SmallGraph(n, adj)


def random_regular_2connected(n: int, d: int, seed: int | None = None, *, attempts: int = 1000) -> SmallGraph:
    rng = random.Random(seed)
    for _ in range(attempts):
        g = random_regular(n, d, rng.randrange(2**63))
        if is_2_connected(g):
            return g
    raise GraphError(f"no 2-connected {d}-regular graph on {n} vertices found in {attempts} attempts")
