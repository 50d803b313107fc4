"""Planarity testing.

``is_planar`` runs the left-right (LR) planarity criterion: one DFS orients the
graph and computes lowpoints and nesting depths, a second DFS processes
outgoing edges by nesting depth while maintaining a stack of conflict pairs of
return-edge intervals. The graph is planar iff no conflict pair ever needs two
edges on the same side. Only the yes/no answer is computed; no embedding.
"""

from __future__ import annotations

import sys

from .graph import SmallGraph, components, iter_bits

# Recursion depth is bounded by the order (<= 31), well under the default limit.
assert sys.getrecursionlimit() > 200


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTest:
    """State for one LR test. Edges are encoded as ``(tail << 5) | head``."""

    def __init__(self, n: int, adj):
        self.n = n
        self.adj = adj
        self.height = [-1] * n
        self.parent_edge = [None] * n
        self.lowpt: dict[int, int] = {}
        self.lowpt2: dict[int, int] = {}
        self.nesting: dict[int, int] = {}
        self.oriented: set[int] = set()
        self.out_edges: list[list[int]] = [[] for _ in range(n)]
        self.ref: dict[int, int | None] = {}
        self.lowpt_edge: dict[int, int] = {}
        self.stack_bottom: dict[int, _ConflictPair | None] = {}
        self.S: list[_ConflictPair] = []

    # -- phase 1: orientation --------------------------------------------

    def orient(self, v: int) -> None:
        e = self.parent_edge[v]
        height, lowpt, lowpt2 = self.height, self.lowpt, self.lowpt2
        for w in iter_bits(self.adj[v]):
            if ((w << 5) | v) in self.oriented or ((v << 5) | w) in self.oriented:
                continue
            vw = (v << 5) | w
            self.oriented.add(vw)
            self.out_edges[v].append(vw)
            lowpt[vw] = height[v]
            lowpt2[vw] = height[v]
            if height[w] == -1:
                self.parent_edge[w] = vw
                height[w] = height[v] + 1
                self.orient(w)
            else:
                lowpt[vw] = height[w]
            depth = 2 * lowpt[vw]
            if lowpt2[vw] < height[v]:
                depth += 1
            self.nesting[vw] = depth
            if e is not None:
                if lowpt[vw] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[vw])
                    lowpt[e] = lowpt[vw]
                elif lowpt[vw] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[vw])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[vw])

    # -- phase 2: testing -------------------------------------------------

    def _conflicting(self, interval: _Interval, b: int) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, p: _ConflictPair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def test(self, v: int) -> bool:
        e = self.parent_edge[v]
        S = self.S
        out = self.out_edges[v]
        for k, ei in enumerate(out):
            w = ei & 31
            self.stack_bottom[ei] = S[-1] if S else None
            if ei == self.parent_edge[w]:
                if not self.test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                S.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if k == 0:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            u = e >> 5
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u]:
                top = S[-1]
                hl, hr = top.left.high, top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
        return True

    def _add_constraints(self, ei: int, e: int) -> bool:
        S = self.S
        lowpt = self.lowpt
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if (S[-1] if S else None) is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while S and (self._conflicting(S[-1].left, ei) or self._conflicting(S[-1].right, ei)):
            Q = S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left.high = Q.left.high
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            S.append(P)
        return True

    def _trim_back_edges(self, u: int) -> None:
        S = self.S
        hu = self.height[u]
        while S and self._lowest(S[-1]) == hu:
            S.pop()
        if not S:
            return
        P = S.pop()
        while P.left.high is not None and (P.left.high & 31) == u:
            P.left.high = self.ref.get(P.left.high)
        if P.left.high is None and P.left.low is not None:
            self.ref[P.left.low] = P.right.low
            P.left.low = None
        while P.right.high is not None and (P.right.high & 31) == u:
            P.right.high = self.ref.get(P.right.high)
        if P.right.high is None and P.right.low is not None:
            self.ref[P.right.low] = P.left.low
            P.right.low = None
        S.append(P)

    def run(self) -> bool:
        roots = []
        for v in range(self.n):
            if self.height[v] == -1:
                self.height[v] = 0
                roots.append(v)
                self.orient(v)
        nesting = self.nesting
        for v in range(self.n):
            self.out_edges[v].sort(key=nesting.__getitem__)
        for r in roots:
            if not self.test(r):
                return False
        return True


def is_planar(g: SmallGraph) -> bool:
    n = g.order
    if n <= 4:
        return True
    e = g.size
    if e > 3 * n - 6:
        return False
    # cyclomatic number below that of K3,3 (4) cannot hold a Kuratowski subdivision
    if e - n + len(components(g)) < 4:
        return True
    return _LRTest(n, g.adj).run()


def planarity_oracle(g: SmallGraph, *, memos: tuple[dict, dict] | None = None) -> bool:
    """Planarity by the absence of K5 and K3,3 minors; order <= 10 only.

    ``memos`` is an optional pair of dicts reused across calls.
    """
    from .minor import K33, K5, minor_oracle

    if g.order > 10:
        raise ValueError("planarity_oracle is limited to order <= 10")
    m5, m33 = memos if memos is not None else ({}, {})
    return not minor_oracle(g, K5, max_order=10, memo=m5) and not minor_oracle(g, K33, max_order=10, memo=m33)
