import io

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zagreb.enumeration import enumerate_labeled
from zagreb.errors import (
    BadChecksumByte,
    DuplicateEdge,
    EdgeListSyntaxError,
    NonCanonicalSize,
    SelfLoop,
    TooLarge,
    TrailingGarbage,
    TruncatedBody,
    VertexOutOfRange,
)
from zagreb.families import build_counterexample_family
from zagreb.graph import build_graph, empty_graph
from zagreb.graph_io import (
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    sniff_format,
    write_edge_list,
    write_graph6,
)
from zagreb.indices import first_zagreb

from conftest import graphs


def hand_decode(line: bytes):
    """Bit-string decoding, written independently of the codec."""
    n = line[0] - 63
    bits = "".join(format(c - 63, "06b") for c in line[1:])
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return n, [p for p, bit in zip(pairs, bits) if bit == "1"]


@pytest.mark.parametrize(
    "line, n, edges",
    [(b"B_", 3, [(0, 1)]), (b"A_", 2, [(0, 1)]), (b"?", 0, []), (b"Bw", 3, [(0, 1), (0, 2), (1, 2)])],
)
def test_known_lines(line, n, edges):
    assert hand_decode(line) == (n, edges)
    g = parse_graph6(line)
    assert (g.n, list(g.edges)) == (n, edges)
    assert write_graph6(g) == line


def test_str_input_and_newline():
    assert parse_graph6("A_\n") == parse_graph6(b"A_")
    assert parse_graph6(b">>graph6<<A_") == parse_graph6(b"A_")


@pytest.mark.parametrize(
    "line, exc",
    [
        (b"A ", BadChecksumByte),
        (b"B\x7f", BadChecksumByte),
        (b"C", TruncatedBody),
        (b"", TruncatedBody),
        (b"A_?", TrailingGarbage),
        (b"A`", TrailingGarbage),  # padding bit set
        (b"~?@", TruncatedBody),
        (b"~??B_", NonCanonicalSize),
        (b"~~?????", TooLarge),
    ],
)
def test_malformed(line, exc):
    with pytest.raises(exc):
        parse_graph6(line)


def test_too_large_to_write():
    with pytest.raises(TooLarge):
        write_graph6(empty_graph(258048))


def test_long_prefix_boundary():
    for n in (62, 63, 64, 100):
        g = empty_graph(n)
        line = write_graph6(g)
        assert (line[0] == 126) == (n >= 63)
        assert parse_graph6(line) == g


@settings(max_examples=200)
@given(st.integers(0, 90), st.floats(0, 1), st.integers(0, 2**31))
def test_matches_networkx_encoder(n, p, seed):
    ref = nx.gnp_random_graph(n, p, seed=seed)
    expected = nx.to_graph6_bytes(ref, header=False).rstrip(b"\n")
    g = build_graph(n, ref.edges())
    assert write_graph6(g) == expected
    assert parse_graph6(expected) == g


@given(graphs(max_n=20))
def test_padding_bits_zero(g):
    line = write_graph6(g)
    nbits = g.n * (g.n - 1) // 2
    pad = (-nbits) % 6
    if pad and len(line) > 1:
        assert (line[-1] - 63) & ((1 << pad) - 1) == 0


def test_round_trip_small_exhaustive():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert parse_graph6(write_graph6(g)) == g


def test_iter_graph6_records(corpus_path):
    with open(corpus_path, "rb") as fh:
        records = list(iter_graph6(fh))
    assert len(records) == 100
    assert all(write_graph6(r.decoded) == r.raw for r in records)
    text_records = list(iter_graph6(io.StringIO("A_\n\nB_\n")))
    assert [r.raw for r in text_records] == [b"A_", b"B_"]


def test_edge_list_triangle():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
    assert g == build_graph(3, [(0, 1), (1, 2), (0, 2)])


def test_edge_list_self_loop_line():
    with pytest.raises(SelfLoop) as info:
        parse_edge_list("2 1\n0 0")
    assert info.value.line == 2
    assert "line 2" in str(info.value)


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("", EdgeListSyntaxError, 1),
        ("3\n", EdgeListSyntaxError, 1),
        ("3 2\n0 1\n", EdgeListSyntaxError, 2),
        ("3 1\n0 1\n1 2\n", EdgeListSyntaxError, 3),
        ("3 1\n0 x\n", EdgeListSyntaxError, 2),
        ("3 2\n0 1\n1 0\n", DuplicateEdge, 3),
        ("3 1\n0 3\n", VertexOutOfRange, 2),
    ],
)
def test_edge_list_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_isolated_vertices_and_comments():
    g = parse_edge_list("# K2 plus two isolated\n4 1\n\n0 1  # the edge\n")
    assert (g.n, g.m) == (4, 1)


def test_edge_list_round_trip_cab():
    g = build_counterexample_family(12, 2)
    text = write_edge_list(g)
    assert text.startswith("19 20\n")
    h = parse_edge_list(text)
    assert h == g and first_zagreb(h) == 198


@given(graphs(max_n=15))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


def test_sniff_and_read(tmp_path):
    assert sniff_format(b"3 3\n0 1\n") == "edges"
    assert sniff_format(b"B_\nA_\n") == "graph6"
    p = tmp_path / "g.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    [(label, g)] = list(read_graphs(str(p)))
    assert label == str(p) and g.m == 2
    q = tmp_path / "g.g6"
    q.write_bytes(b"A_\n\nBw\n")
    assert [(lab.rsplit(":", 1)[1], h.m) for lab, h in read_graphs(str(q))] == [("1", 1), ("3", 3)]
    stdin = io.StringIO("2 1\n0 1\n")
    [(label, g)] = list(read_graphs("-", stdin=stdin))
    assert label == "stdin" and g.m == 1
