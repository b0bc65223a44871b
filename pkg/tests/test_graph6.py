import random

import networkx as nx
import pytest

from pack2dom import (
    Graph,
    Graph6Error,
    GraphError,
    format_edgelist,
    parse_edgelist,
    parse_graph6,
    to_graph6,
)

from helpers import complete_graph, random_graph


def test_hand_decoded_five_vertex_string():
    # 'D' encodes n=5; data "?{" unpacks to bits 000000 111100, whose first
    # ten positions mark exactly the pairs (0,4),(1,4),(2,4),(3,4).
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))


def test_single_edge_encodes_to_A_underscore():
    assert to_graph6(Graph(2, [(0, 1)])) == "A_"


def test_one_vertex_encodes_to_at_sign():
    assert to_graph6(Graph(1)) == "@"


def test_header_accepted():
    assert parse_graph6(">>graph6<<A_") == Graph(2, [(0, 1)])


@pytest.mark.parametrize(
    "bad",
    ["", "~??", "A", "A__", "D?", chr(40) + "?", "A" + chr(200)],
)
def test_malformed_inputs(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_nonzero_padding_rejected():
    # K2's single data byte is '_' (bit 100000); flipping a padding bit gives 'a'.
    with pytest.raises(Graph6Error):
        parse_graph6("Aa")


def test_roundtrip_random_graphs():
    rng = random.Random(4)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 30), rng.random())
        s = to_graph6(g)
        assert parse_graph6(s) == g
        assert to_graph6(parse_graph6(s)) == s


def test_codec_agrees_with_networkx():
    rng = random.Random(8)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 25), rng.choice([0.2, 0.5, 0.8]))
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == theirs
        back = nx.from_graph6_bytes(theirs.encode())
        assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges)


def test_size_limit():
    with pytest.raises(Graph6Error):
        to_graph6(Graph(63))


def test_edgelist_roundtrip():
    g = complete_graph(4)
    assert parse_edgelist(format_edgelist(g)) == g


def test_edgelist_comments_and_blanks():
    text = """# a complete triangle
    3 3

    0 1  # first
    1 2
    0 2
    """
    assert parse_edgelist(text) == complete_graph(3)


@pytest.mark.parametrize(
    "bad",
    ["", "3", "3 2\n0 1", "2 1\n0 1\n1 0", "3 1\n0 x", "3 1\n0 1 2"],
)
def test_edgelist_malformed(bad):
    with pytest.raises(GraphError):
        parse_edgelist(bad)
