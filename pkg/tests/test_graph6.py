import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from graphbounds.families import complete_graph, enumerate_up_to, hoffman_singleton_graph, matching_complement
from graphbounds.graph import empty_graph, graph_from_edges
from graphbounds.graph6 import HEADER, Graph6Error, encode_graph6, parse_graph6
from oracles import to_nx
from strategies import graphs


def reference_encode(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize("code,n,m", [("@", 1, 0), ("A_", 2, 1), ("D??", 5, 0), ("Bw", 3, 3)])
def test_known_codes(code, n, m):
    g = parse_graph6(code)
    assert (g.n, g.m) == (n, m)
    assert encode_graph6(g) == code.encode()


def test_encode_examples():
    assert encode_graph6(complete_graph(1)) == b"@"
    assert encode_graph6(complete_graph(2)) == b"A_"
    assert encode_graph6(empty_graph(5)) == b"D??"


def test_all_labeled_graphs_up_to_five_match_reference():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = graph_from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            code = encode_graph6(g)
            assert code == reference_encode(g)
            assert parse_graph6(code) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=64))
def test_round_trip_and_reference(g):
    code = encode_graph6(g)
    assert parse_graph6(code) == g
    assert code == reference_encode(g)
    back = nx.from_graph6_bytes(code)
    assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


def test_round_trip_every_class_to_eight():
    for g in enumerate_up_to(8):
        assert parse_graph6(encode_graph6(g)) == g


def test_long_size_field():
    g = graph_from_edges(64, [(0, 63), (10, 20)])
    code = encode_graph6(g)
    assert code[:1] == b"~" and len(code) == 4 + (64 * 63 // 2 + 5) // 6
    assert parse_graph6(code) == g
    assert code == reference_encode(g)


def test_header_and_whitespace():
    assert parse_graph6(HEADER + b"A_\n") == complete_graph(2)
    assert parse_graph6("  Bw \r\n") == complete_graph(3)


def test_large_families():
    for g in (hoffman_singleton_graph(), matching_complement(62), complete_graph(62)):
        assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("text,position", [
    ("A", 1),        # too short
    ("A_?", 2),      # too long
    ("A ", None),    # trailing space is stripped, so length error
    ("A\x7f", 1),    # byte 127
    ("A>", 1),       # byte 62
    ("", 0),
    ("?", 0),        # n = 0
    ("~~??????", 1),  # eight-byte form, n > 64
    ("~?AA", None),  # n = 65 in long form
    ("~??A", 0),     # long form for n <= 62
    ("A`", 1),       # non-zero padding
])
def test_malformed(text, position):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    if position is not None:
        assert info.value.position == position
