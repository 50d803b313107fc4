"""Batch workflows: apex classification of streams, the edge-deletion cascade,
count tables by (order, size), and the sampled K6-minor audit."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .apex import ApexKind, apex_vertices, classify_apex
from .canon import DedupStore, canonical_form
from .enumeration import EnumSpec, random_regular_2connected
from .graph import SmallGraph, cone, icosahedral_graph, is_connected, min_degree
from .graph6 import decode, encode
from .minor import K6, check_witness, has_k6_minor
from .mmna import MmnaKind, is_mmna

log = logging.getLogger(__name__)


# -- count tables ------------------------------------------------------------


@dataclass
class CountTable:
    cells: Counter = field(default_factory=Counter)

    @classmethod
    def from_graphs(cls, graphs: Iterable[SmallGraph], *, dedup: bool = True) -> CountTable:
        if dedup:
            store = DedupStore()
            for g in graphs:
                store.add(g)
            graphs = store.graphs()
        table = cls()
        for g in graphs:
            table.cells[(g.order, g.size)] += 1
        return table

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in sorted(self.cells.items()) if v}

    def row(self, n: int) -> dict[int, int]:
        return {e: c for (m, e), c in sorted(self.cells.items()) if m == n and c}

    def row_totals(self) -> dict[int, int]:
        out: Counter = Counter()
        for (n, _), c in self.cells.items():
            out[n] += c
        return dict(sorted(out.items()))

    def column_totals(self) -> dict[int, int]:
        out: Counter = Counter()
        for (_, e), c in self.cells.items():
            out[e] += c
        return dict(sorted(out.items()))

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "e", "count"])
        for (n, e), c in sorted(self.cells.items()):
            if c:
                w.writerow([n, e, c])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = self.as_dict()
        if not cells:
            return "(empty table)\n"
        ns = sorted({n for n, _ in cells})
        es = list(range(min(e for _, e in cells), max(e for _, e in cells) + 1))
        width = max(3, max(len(str(c)) for c in cells.values()) + 1)
        lines = ["n / e".ljust(6) + "".join(str(e).rjust(width) for e in es) + "  total".rjust(width + 2)]
        totals = self.row_totals()
        for n in ns:
            body = "".join((str(cells[(n, e)]) if (n, e) in cells else ".").rjust(width) for e in es)
            lines.append(str(n).ljust(6) + body + str(totals[n]).rjust(width + 2))
        return "\n".join(lines) + "\n"


# -- classification ------------------------------------------------------------


@dataclass
class ClassifyResult:
    planar: list[SmallGraph] = field(default_factory=list)
    apex: list[SmallGraph] = field(default_factory=list)
    nonapex: list[SmallGraph] = field(default_factory=list)
    verdicts: list[tuple[ApexKind, int | None]] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        return {"planar": len(self.planar), "apex": len(self.apex), "nonapex": len(self.nonapex)}


def classify_graphs(graphs: Iterable[SmallGraph]) -> ClassifyResult:
    res = ClassifyResult()
    buckets = {ApexKind.PLANAR: res.planar, ApexKind.APEX: res.apex, ApexKind.NONAPEX: res.nonapex}
    for g in graphs:
        v = classify_apex(g)
        buckets[v.kind].append(g)
        res.verdicts.append((v.kind, v.witness))
    return res


# -- cascade -------------------------------------------------------------------


@dataclass
class CascadeConfig:
    min_degree: int = 3
    connected_only: bool = False
    max_depth: int | None = None
    workers: int = 1
    checkpoint_dir: str | None = None

    def __post_init__(self):
        if self.min_degree < 0:
            raise ValueError("min_degree must be >= 0")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def echo(self) -> str:
        return (
            f"min_degree={self.min_degree} connected_only={self.connected_only} "
            f"max_depth={self.max_depth} workers={self.workers}"
        )


@dataclass
class CascadeResult:
    mmna: list[SmallGraph]
    complete: bool
    stats: Counter
    # graphs left untested because they lie deeper than max_depth
    unexplored: list[SmallGraph] = field(default_factory=list)

    @property
    def table(self) -> CountTable:
        return CountTable.from_graphs(self.mmna, dedup=False)


def cascade_seed_spec(n: int) -> EnumSpec:
    """Order-``n`` seeds: min degree 3 and ceil(3n/2) <= e <= 4n-10.

    K6 is the single MMNA graph above 4n-10, so at n = 6 the upper bound is
    widened to 15 to admit it.
    """
    hi = 15 if n == 6 else 4 * n - 10
    return EnumSpec(n, min_size=-(-3 * n // 2), max_size=hi, min_degree=3)


def _passes(g: SmallGraph, cfg: CascadeConfig) -> bool:
    if g.order and min_degree(g) < cfg.min_degree:
        return False
    return not cfg.connected_only or is_connected(g)


def _deletion_children(g: SmallGraph, cfg: CascadeConfig) -> list[tuple[bytes, SmallGraph]]:
    d = cfg.min_degree
    adj = g.adj
    out = []
    seen = set()
    for u, v in g.edges():
        if adj[u].bit_count() <= d or adj[v].bit_count() <= d:
            continue
        rows = list(adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        child = SmallGraph(g.order, rows, check=False)
        if cfg.connected_only and not is_connected(child):
            continue
        key = canonical_form(child)
        if key not in seen:
            seen.add(key)
            out.append((key, child))
    return out


def _process(item: tuple[bytes, SmallGraph, CascadeConfig]) -> tuple[str, list[tuple[bytes, SmallGraph]]]:
    """Test one graph; return its fate and, when it must be split further, its children."""
    _, g, cfg = item
    verdict = is_mmna(g)
    if verdict.kind is MmnaKind.NOT_NONAPEX:
        return "apex", []
    if verdict.kind is MmnaKind.MMNA:
        return "mmna", []
    if verdict.kind is MmnaKind.FAILS_CONTRACTION:
        # every one-edge deletion was verified apex, nothing below is non-apex
        return "not_mmna", []
    return "not_mmna", _deletion_children(g, cfg)


def _map(items: list, cfg: CascadeConfig):
    if cfg.workers > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(cfg.workers) as pool:
            return list(pool.map(_process, items, chunksize=max(1, len(items) // (8 * cfg.workers))))
    return [_process(it) for it in items]


def _save_checkpoint(path: Path, pending: dict, depth: dict, mmna: DedupStore, stats: Counter) -> None:
    state = {
        "pending": [
            [encode(g).decode(), depth[key]] for store in pending.values() for key, g in zip(store.keys(), store.graphs())
        ],
        "mmna": [encode(g).decode() for g in mmna.graphs()],
        "stats": dict(stats),
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(state))
    os.replace(tmp, path)


def cascade(seeds: Iterable[SmallGraph], cfg: CascadeConfig | None = None) -> CascadeResult:
    """Edge-deletion cascade from ``seeds`` down to the apex boundary.

    Graphs are processed in descending size. Each is classified; apex graphs
    are dropped, MMNA graphs are kept, and other non-apex graphs contribute
    every one-edge deletion that passes the degree/connectivity filters,
    deduplicated by canonical form. Stops when no non-apex graph remains or
    when the next layer lies beyond ``max_depth`` deletions from any seed.
    """
    cfg = cfg or CascadeConfig()
    stats: Counter = Counter()
    mmna = DedupStore()
    # (order, size) -> {key: graph}; depth tracked per key
    pending: dict[tuple[int, int], DedupStore] = {}
    depth: dict[bytes, int] = {}

    ckpt = Path(cfg.checkpoint_dir) / "cascade_state.json" if cfg.checkpoint_dir else None
    if ckpt is not None and ckpt.exists():
        state = json.loads(ckpt.read_text())
        for line, d in state["pending"]:
            g = decode(line)
            key = canonical_form(g)
            pending.setdefault((g.order, g.size), DedupStore()).add(g, key)
            depth[key] = d
        for s in state["mmna"]:
            mmna.add(decode(s))
        stats.update(state["stats"])
        stats["resumed"] += 1
        log.info("resumed cascade from %s", ckpt)
    else:
        for g in seeds:
            stats["seeds"] += 1
            if not _passes(g, cfg):
                stats["seeds_filtered"] += 1
                continue
            key = canonical_form(g)
            if pending.setdefault((g.order, g.size), DedupStore()).add(g, key):
                depth[key] = 0

    unexplored: list[SmallGraph] = []
    while pending:
        level = max(pending, key=lambda k: (k[1], k[0]))
        store = pending.pop(level)
        keys = store.keys()
        graphs = store.graphs()
        live = []
        for key, g in zip(keys, graphs):
            if cfg.max_depth is not None and depth[key] > cfg.max_depth:
                unexplored.append(g)
            else:
                live.append((key, g, cfg))
        stats["tested"] += len(live)
        for (key, g, _), (fate, children) in zip(live, _map(live, cfg)):
            stats[fate] += 1
            if fate == "mmna":
                mmna.add(g, key)
            d = depth[key] + 1
            for ck, child in children:
                lvl = (child.order, child.size)
                target = pending.setdefault(lvl, DedupStore())
                if target.add(child, ck):
                    depth[ck] = d
                    stats["children"] += 1
                elif depth[ck] > d:
                    depth[ck] = d
        for key in keys:
            depth.pop(key, None)
        log.info("level n=%d e=%d: %d tested, %d mmna so far", level[0], level[1], len(live), len(mmna))
        if ckpt is not None:
            _save_checkpoint(ckpt, pending, depth, mmna, stats)
    if ckpt is not None and ckpt.exists():
        ckpt.unlink()
    return CascadeResult(mmna.graphs(), complete=not unexplored, stats=stats, unexplored=unexplored)


# -- K6 audit -------------------------------------------------------------------


@dataclass
class AuditReport:
    sampled: int
    with_k6: int
    counterexamples: list[SmallGraph]
    invalid_witnesses: int
    control_k6_free: bool
    control_apex: bool

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.invalid_witnesses and self.with_k6 == self.sampled

    def to_text(self) -> str:
        lines = [
            f"sampled 6-regular 2-connected order-13 graphs: {self.sampled}",
            f"with K6 minor (valid witness): {self.with_k6}/{self.sampled}",
            f"invalid witnesses: {self.invalid_witnesses}",
            f"control K1*Ic: K6-minor-free={self.control_k6_free} apex={self.control_apex}",
        ]
        lines += [f"counterexample {encode(g).decode()}" for g in self.counterexamples]
        return "\n".join(lines) + "\n"


def k6_audit(count: int, seed: int = 0, *, order: int = 13, degree: int = 6) -> AuditReport:
    if count < 1:
        raise ValueError("count must be >= 1")
    import random

    rng = random.Random(seed)
    found = invalid = 0
    counter = []
    for _ in range(count):
        g = random_regular_2connected(order, degree, rng.randrange(2**63))
        wit = has_k6_minor(g)
        if wit is None:
            counter.append(g)
        elif check_witness(g, K6, wit):
            found += 1
        else:
            invalid += 1
    control = cone(icosahedral_graph())
    k6_free = has_k6_minor(control) is None
    control_apex = classify_apex(control).kind is ApexKind.APEX and control.order - 1 in apex_vertices(control)
    return AuditReport(count, found, counter, invalid, k6_free, control_apex)


def canonical_sorted(graphs: Iterable[SmallGraph]) -> list[SmallGraph]:
    return sorted(graphs, key=canonical_form)
