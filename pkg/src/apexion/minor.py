"""Minor containment with branch-set witnesses.

For a connected pattern ``h`` and a connected host, ``h`` is a minor iff the
host vertex set splits into ``|h|`` connected branch sets with a host edge
between the sets of every pattern edge (unused vertices can always be absorbed
into a neighbouring set). The search grows branch sets by merging two adjacent
ones, i.e. contracting a host edge, until exactly ``|h|`` sets remain, then
looks for a pattern embedding in the quotient. Failed quotients are memoised
by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .canon import canonical_form
from .graph import (
    SmallGraph,
    _contract_rows,
    complete_bipartite,
    complete_graph,
    components,
    contract_edge,
    delete_vertex,
    is_connected,
    iter_bits,
)

K3 = complete_graph(3)
K4 = complete_graph(4)
K5 = complete_graph(5)
K6 = complete_graph(6)
K33 = complete_bipartite(3, 3)

ORACLE_MAX_ORDER = 9


@dataclass(frozen=True)
class BranchDecomposition:
    """``sets[a]`` is the bitmask of host vertices contracted onto pattern vertex ``a``."""

    sets: tuple[int, ...]

    def vertex_sets(self) -> list[list[int]]:
        return [list(iter_bits(s)) for s in self.sets]


def check_witness(g: SmallGraph, h: SmallGraph, wit: BranchDecomposition) -> bool:
    """Independent validity check of a branch decomposition of ``h`` in ``g``."""
    if len(wit.sets) != h.order:
        return False
    seen = 0
    for s in wit.sets:
        if not s or s & seen or s >> g.order:
            return False
        seen |= s
        if not is_connected(g.induced_subgraph(iter_bits(s))):
            return False
    for a, b in h.edges():
        sa, sb = wit.sets[a], wit.sets[b]
        if not any(g.adj[x] & sb for x in iter_bits(sa)):
            return False
    return True


def _embed_spanning(adj: list[int], h: SmallGraph) -> list[int] | None:
    """Bijection pattern -> quotient vertices with every pattern edge present, or None."""
    k = h.order
    hadj = h.adj
    hdeg = [r.bit_count() for r in hadj]
    deg = [r.bit_count() for r in adj]
    # assign pattern vertices in descending degree order
    order = sorted(range(k), key=lambda a: (-hdeg[a], a))
    image = [-1] * k
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        a = order[i]
        need = 0
        for b in iter_bits(hadj[a]):
            if image[b] >= 0:
                need |= 1 << image[b]
        for x in range(k):
            if used >> x & 1 or deg[x] < hdeg[a] or adj[x] & need != need:
                continue
            image[a] = x
            used |= 1 << x
            if place(i + 1):
                return True
            used &= ~(1 << x)
            image[a] = -1
        return False

    return image if place(0) else None


class _MinorSearch:
    def __init__(self, h: SmallGraph, prune_planar: bool):
        self.h = h
        self.k = h.order
        self.hsize = h.size
        self.hmin = min(h.degrees())
        self.prune_planar = prune_planar
        self.failed: set[bytes] = set()
        self.nodes = 0

    def search(self, adj: list[int], groups: list[int]) -> list[int] | None:
        self.nodes += 1
        m = len(adj)
        size = sum(r.bit_count() for r in adj) // 2
        # each further merge removes at least one edge
        if size - (m - self.k) < self.hsize:
            return None
        if m == self.k:
            image = _embed_spanning(adj, self.h)
            return None if image is None else [groups[x] for x in image]
        g = SmallGraph(m, adj, check=False)
        key = canonical_form(g)
        if key in self.failed:
            return None
        if self.prune_planar:
            from .planarity import is_planar

            if is_planar(g):
                self.failed.add(key)
                return None
        for u, v in self._candidate_edges(adj):
            rows = _contract_rows(adj, u, v)
            grp = list(groups)
            grp[u] |= grp[v]
            del grp[v]
            found = self.search(rows, grp)
            if found is not None:
                return found
        self.failed.add(key)
        return None

    def _candidate_edges(self, adj: list[int]) -> list[tuple[int, int]]:
        deg = [r.bit_count() for r in adj]
        low = min(range(len(adj)), key=lambda x: (deg[x], x))
        if deg[low] < self.hmin:
            # a vertex too weak to be a branch set on its own must merge with a neighbour
            pairs = [(min(low, w), max(low, w)) for w in iter_bits(adj[low])]
        else:
            pairs = [(u, w) for u in range(len(adj)) for w in iter_bits(adj[u] >> (u + 1) << (u + 1))]
        # fewest shared neighbours first (cheapest merges), then high degree
        pairs.sort(key=lambda p: ((adj[p[0]] & adj[p[1]]).bit_count(), -(deg[p[0]] + deg[p[1]]), p))
        return pairs


def has_minor(g: SmallGraph, h: SmallGraph, *, apex_prune: bool = True) -> BranchDecomposition | None:
    """Return a branch decomposition witnessing ``h`` as a minor of ``g``, or None.

    ``h`` must be connected. With ``apex_prune`` the search is skipped when
    ``h`` is non-apex and ``g`` is apex (or ``h`` nonplanar and ``g`` planar),
    since both classes are minor-closed.
    """
    from .apex import ApexKind, classify_apex

    if h.order == 0:
        return BranchDecomposition(())
    if not is_connected(h):
        raise ValueError("pattern graph must be connected")
    if h.order > g.order or h.size > g.size:
        return None
    if h.order == g.order and all(g.adj[a] >> b & 1 for a, b in h.edges()):
        return BranchDecomposition(tuple(1 << v for v in range(g.order)))
    if apex_prune:
        hk = classify_apex(h).kind
        if hk is not ApexKind.PLANAR:
            gk = classify_apex(g).kind
            if gk is ApexKind.PLANAR or (hk is ApexKind.NONAPEX and gk is ApexKind.APEX):
                return None
    prune_planar = False
    if apex_prune:
        from .planarity import is_planar

        prune_planar = not is_planar(h)
    for comp in components(g):
        if comp.bit_count() < h.order:
            continue
        verts = list(iter_bits(comp))
        sub = g.induced_subgraph(verts)
        if sub.size < h.size:
            continue
        # strongest vertices first so witnesses are reproducible
        order = sorted(range(sub.order), key=lambda x: (-sub.degree(x), x))
        pos = [0] * sub.order
        for i, x in enumerate(order):
            pos[x] = i
        sub2 = sub.relabel(pos)
        search = _MinorSearch(h, prune_planar)
        found = search.search(list(sub2.adj), [1 << order[i] for i in range(sub2.order)])
        if found is not None:
            sets = []
            for mask in found:
                full = 0
                for x in iter_bits(mask):
                    full |= 1 << verts[x]
                sets.append(full)
            return BranchDecomposition(tuple(sets))
    return None


def has_k6_minor(g: SmallGraph) -> BranchDecomposition | None:
    if g.order < 6 or g.size < 15:
        return None
    return has_minor(g, K6)


def minor_oracle(
    g: SmallGraph, h: SmallGraph, *, max_order: int = ORACLE_MAX_ORDER, memo: dict[bytes, bool] | None = None
) -> bool:
    """Slow reference check by recursive vertex deletion and edge contraction.

    A graph of the same order as ``h`` qualifies iff some vertex permutation
    maps every edge of ``h`` onto an edge of it. ``memo`` may be shared between
    calls with the same ``h``.
    """
    if g.order > max_order:
        raise ValueError(f"minor_oracle is limited to order <= {max_order}")
    k = h.order
    hedges = h.edges()
    if memo is None:
        memo = {}

    def contains_spanning(x: SmallGraph) -> bool:
        return any(all(x.has_edge(p[a], p[b]) for a, b in hedges) for p in permutations(range(k)))

    def rec(x: SmallGraph) -> bool:
        if x.order < k or x.size < len(hedges):
            return False
        key = canonical_form(x)
        if key in memo:
            return memo[key]
        if x.order == k:
            res = contains_spanning(x)
        else:
            res = any(rec(delete_vertex(x, v)) for v in range(x.order)) or any(
                rec(contract_edge(x, e)) for e in x.edges()
            )
        memo[key] = res
        return res

    if k == 0:
        return True
    return rec(g)
