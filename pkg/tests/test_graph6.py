import io
import random

import networkx as nx
import pytest
from hypothesis import given

from apexion.enumeration import EnumSpec, enumerate_all
from apexion.graph import SmallGraph, complete_graph, petersen_graph
from apexion.graph6 import Graph6Error, StreamReport, decode, encode, read_stream, write_stream

from helpers import graphs

# Hand-encoded from the format definition: n byte = 63 + n, then the upper
# triangle bits x(0,1), x(0,2), x(1,2), ... in 6-bit groups, each + 63.
K1 = b"@"  # 63 + 1 = 64
K2 = b"A_"  # 63 + 2 = 65; bits "1" -> 100000 = 32, + 63 = 95
K3 = b"Bw"  # bits "111" -> 111000 = 56, + 63 = 119


def test_fixed_vectors():
    assert encode(complete_graph(1)) == K1
    assert encode(complete_graph(2)) == K2
    assert encode(complete_graph(3)) == K3
    assert decode(K1) == complete_graph(1)
    assert decode("A_") == complete_graph(2)


def test_matches_networkx_writer():
    for g in [petersen_graph(), complete_graph(7), SmallGraph.from_edges(9, [(0, 8), (3, 4)])]:
        G = nx.Graph()
        G.add_nodes_from(range(g.order))
        G.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(G, header=False).strip() == encode(g)


def test_round_trip_all_order_4():
    gs = list(enumerate_all(EnumSpec(4)))
    assert len(gs) == 11
    for g in gs:
        assert decode(encode(g)) == g


@given(graphs(max_order=31, density=0.3))
def test_round_trip_random(g):
    assert decode(encode(g)) == g


@pytest.mark.parametrize(
    "record, kind",
    [
        (b"B", "length"),  # truncated
        (b"Bww", "length"),  # too long
        (b"B\x20", "byte"),
        (b"A`", "padding"),  # 96 - 63 = 33 = 100001, low pad bit set
        (b"_" + b"?" * 80, "order"),  # n = 32
        (b"", "length"),
    ],
)
def test_parse_errors(record, kind):
    with pytest.raises(Graph6Error) as exc:
        decode(record)
    assert exc.value.kind == kind


def test_header_tolerated():
    assert decode(b">>graph6<<A_") == complete_graph(2)
    src = io.BytesIO(b">>graph6<<\nA_\n")
    assert list(read_stream(src)) == [complete_graph(2)]


def test_stream_order_and_crlf():
    src = io.BytesIO(b"@\r\nA_\nBw\n")
    assert list(read_stream(src)) == [complete_graph(1), complete_graph(2), complete_graph(3)]


def test_stream_skip_and_fail_fast(caplog):
    data = b"@\nZZ\nA_\n"
    report = StreamReport()
    out = list(read_stream(io.BytesIO(data), skip_errors=True, report=report))
    assert out == [complete_graph(1), complete_graph(2)]
    assert report.count == 2 and len(report.errors) == 1 and report.errors[0].line == 2
    assert "line 2" in caplog.text
    with pytest.raises(Graph6Error) as exc:
        list(read_stream(io.BytesIO(data)))
    assert exc.value.line == 2


def test_write_stream():
    sink = io.BytesIO()
    assert write_stream(sink, [complete_graph(1), complete_graph(2)]) == 2
    assert sink.getvalue() == b"@\nA_\n"


def test_fuzz_never_crashes():
    rng = random.Random(7)
    for _ in range(2000):
        blob = bytes(rng.randrange(256) for _ in range(rng.randrange(12)))
        try:
            g = decode(blob)
        except Graph6Error:
            continue
        assert encode(g) == blob
