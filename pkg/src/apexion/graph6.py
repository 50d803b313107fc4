"""graph6 encoding and newline-delimited graph6 streams.

Only the single-byte order prefix is produced (orders up to 31 fit comfortably);
the decoder accepts the ``~`` long-order prefix too but still enforces the
capacity limit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .graph import MAX_ORDER, SmallGraph

log = logging.getLogger(__name__)

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Parse failure. ``kind`` is one of length, byte, padding, order."""

    def __init__(self, kind: str, message: str, offset: int, line: int | None = None):
        self.kind = kind
        self.offset = offset
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{where}byte {offset}: {message}")


def _edge_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def encode(g: SmallGraph) -> bytes:
    n = g.order
    out = bytearray([63 + n])
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def decode(record: bytes | str) -> SmallGraph:
    if isinstance(record, str):
        try:
            record = record.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("byte", "non-ASCII character", exc.start) from None
    data = record
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    else:
        base = 0
    if not data:
        raise Graph6Error("length", "empty record", base)
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error("byte", f"byte value {b} outside 63..126", base + k)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("order", "8-byte order prefix exceeds capacity", base)
        if len(data) < 4:
            raise Graph6Error("length", "truncated long-order prefix", base + len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        start = 4
    else:
        n = data[0] - 63
        start = 1
    if n > MAX_ORDER:
        raise Graph6Error("order", f"order {n} exceeds capacity {MAX_ORDER}", base)
    nbits = _edge_bit_count(n)
    expected = start + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(
            "length", f"expected {expected} bytes for order {n}, got {len(data)}", base + min(len(data), expected)
        )
    pad = (6 - nbits % 6) % 6
    if pad and (data[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("padding", "nonzero padding bits", base + len(data) - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[start + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return SmallGraph(n, adj, check=False)


@dataclass
class StreamReport:
    count: int = 0
    errors: list[Graph6Error] = field(default_factory=list)


def read_stream(
    source: IO[bytes] | Iterable[bytes], *, skip_errors: bool = False, report: StreamReport | None = None
) -> Iterator[SmallGraph]:
    """Yield graphs from newline-delimited graph6 lines.

    Blank lines are ignored and a leading ``>>graph6<<`` header is tolerated.
    With ``skip_errors`` bad lines are logged and collected in ``report``;
    otherwise the first bad line raises.
    """
    if report is None:
        report = StreamReport()
    for lineno, raw in enumerate(source, start=1):
        if isinstance(raw, str):
            raw = raw.encode("ascii", "replace")
        line = raw.rstrip(b"\r\n")
        if not line.strip():
            continue
        if line == HEADER:
            continue
        try:
            g = decode(line)
        except Graph6Error as exc:
            exc.line = lineno
            exc.args = (f"line {lineno}, {exc.args[0]}",)
            if not skip_errors:
                raise
            log.warning("skipping bad graph6 record: %s", exc)
            report.errors.append(exc)
            continue
        report.count += 1
        yield g


def write_stream(sink: IO[bytes], graphs: Iterable[SmallGraph]) -> int:
    count = 0
    for g in graphs:
        sink.write(encode(g))
        sink.write(b"\n")
        count += 1
    return count


def read_file(path, *, skip_errors: bool = False) -> list[SmallGraph]:
    with open(path, "rb") as fh:
        return list(read_stream(fh, skip_errors=skip_errors))


def write_file(path, graphs: Iterable[SmallGraph]) -> int:
    with open(path, "wb") as fh:
        return write_stream(fh, graphs)
