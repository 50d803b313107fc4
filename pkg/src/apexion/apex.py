"""Apex classification: planar, apex (with a witness vertex), or non-apex."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import planarity
from .graph import SmallGraph, delete_vertex


class ApexKind(enum.Enum):
    PLANAR = "planar"
    APEX = "apex"
    NONAPEX = "nonapex"


@dataclass(frozen=True)
class ApexVerdict:
    kind: ApexKind
    witness: int | None = None

    @property
    def is_apex(self) -> bool:
        """True for planar graphs too (removing any vertex keeps them planar)."""
        return self.kind is not ApexKind.NONAPEX


def _probe_order(g: SmallGraph, order: str) -> list[int]:
    if order == "index":
        return list(range(g.order))
    if order == "degree":
        return sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    raise ValueError(f"unknown probe order {order!r}")


def _can_be_planar_after(g: SmallGraph, size: int, v: int) -> bool:
    # Euler bound on the (order - 1)-vertex remainder
    m = g.order - 1
    return m < 3 or size - g.adj[v].bit_count() <= 3 * m - 6


def classify_apex(g: SmallGraph, *, order: str = "index") -> ApexVerdict:
    """Planar check first, then delete vertices one at a time until one leaves a planar graph.

    With the default ``order="index"`` the witness is the smallest qualifying vertex.
    """
    if planarity.is_planar(g):
        return ApexVerdict(ApexKind.PLANAR)
    size = g.size
    for v in _probe_order(g, order):
        if _can_be_planar_after(g, size, v) and planarity.is_planar(delete_vertex(g, v)):
            return ApexVerdict(ApexKind.APEX, v)
    return ApexVerdict(ApexKind.NONAPEX)


def apex_vertices(g: SmallGraph) -> set[int]:
    if planarity.is_planar(g):
        raise ValueError("apex_vertices is undefined for planar graphs")
    size = g.size
    return {
        v for v in range(g.order) if _can_be_planar_after(g, size, v) and planarity.is_planar(delete_vertex(g, v))
    }


def is_apex(g: SmallGraph) -> bool:
    return classify_apex(g).is_apex
