"""Minor-minimal non-apex (MMNA) verification.

Apexness is minor-closed, so a non-apex graph is MMNA iff every one-edge
deletion and every one-edge contraction is apex. Deletions are checked first,
then contractions, stopping at the first non-apex minor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .apex import ApexKind, classify_apex
from .canon import canonical_form
from .graph import SmallGraph, contract_edge, delete_edge


class MmnaKind(enum.Enum):
    NOT_NONAPEX = "not_nonapex"
    FAILS_DELETION = "fails_deletion"
    FAILS_CONTRACTION = "fails_contraction"
    MMNA = "mmna"


@dataclass(frozen=True)
class MmnaVerdict:
    kind: MmnaKind
    # ("delete" | "contract", edge) for the first non-apex one-step minor
    counterexample: tuple[str, tuple[int, int]] | None = None

    @property
    def is_mmna(self) -> bool:
        return self.kind is MmnaKind.MMNA


def one_edge_deletions(g: SmallGraph) -> list[SmallGraph]:
    return [delete_edge(g, e) for e in g.edges()]


def one_edge_contractions(g: SmallGraph) -> list[SmallGraph]:
    return [contract_edge(g, e) for e in g.edges()]


def _first_nonapex(g: SmallGraph, op, dedup_minors: bool) -> tuple[int, int] | None:
    seen: set[bytes] = set()
    for e in g.edges():
        minor = op(g, e)
        if dedup_minors:
            key = canonical_form(minor)
            if key in seen:
                continue
            seen.add(key)
        if classify_apex(minor).kind is ApexKind.NONAPEX:
            return e
    return None


def is_mmna(g: SmallGraph, *, dedup_minors: bool = True) -> MmnaVerdict:
    """Classify ``g``; non-apexness of ``g`` itself is verified first.

    ``dedup_minors`` skips one-step minors isomorphic to one already found apex;
    it changes cost only, never the verdict or the reported edge.
    """
    if classify_apex(g).kind is not ApexKind.NONAPEX:
        return MmnaVerdict(MmnaKind.NOT_NONAPEX)
    e = _first_nonapex(g, delete_edge, dedup_minors)
    if e is not None:
        return MmnaVerdict(MmnaKind.FAILS_DELETION, ("delete", e))
    e = _first_nonapex(g, contract_edge, dedup_minors)
    if e is not None:
        return MmnaVerdict(MmnaKind.FAILS_CONTRACTION, ("contract", e))
    return MmnaVerdict(MmnaKind.MMNA)


@dataclass
class MmnaPartition:
    mmna: list[SmallGraph]
    not_mmna: list[SmallGraph]

    @property
    def counts(self) -> dict[str, int]:
        return {"mmna": len(self.mmna), "not_mmna": len(self.not_mmna)}


def mmna_filter(graphs: Iterable[SmallGraph], *, workers: int = 1) -> MmnaPartition:
    graphs = list(graphs)
    if workers > 1 and len(graphs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(is_mmna, graphs, chunksize=max(1, len(graphs) // (4 * workers))))
    else:
        verdicts = [is_mmna(g) for g in graphs]
    part = MmnaPartition([], [])
    for g, v in zip(graphs, verdicts):
        (part.mmna if v.is_mmna else part.not_mmna).append(g)
    return part
