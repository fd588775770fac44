import random

import networkx as nx
import pytest
from hypothesis import given, settings

from bmp import generators as gen
from bmp.errors import FormatError, GraphValidationError, ParameterError, ParseError
from bmp.graph import (
    Graph,
    connected_components,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
)
from conftest import graphs
from oracles import random_graph


def _symmetric_simple(g: Graph) -> bool:
    for v, nbrs in enumerate(g.adjacency):
        if v in nbrs or list(nbrs) != sorted(set(nbrs)):
            return False
        if any(v not in g.adjacency[u] for u in nbrs):
            return False
    return True


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2")
        assert g.n == 3
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_header_cycle(self):
        g = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0")
        assert g == gen.cycle(4)

    def test_header_keeps_isolated_vertices(self):
        assert parse_edge_list("n 5\n0 1").n == 5

    def test_comments_and_whitespace(self):
        g = parse_edge_list("# a triangle\n\n  0   1 \n1\t2  # trailing\n2 0\n")
        assert g == gen.cycle(3)

    def test_self_loop(self):
        with pytest.raises(GraphValidationError, match="self-loop"):
            parse_edge_list("0 0")

    def test_duplicate(self):
        with pytest.raises(GraphValidationError, match="duplicate"):
            parse_edge_list("0 1\n1 0")

    @pytest.mark.parametrize("text, line", [("0 1\n1 x", 2), ("0 1 2", 1), ("\n\n-1 2", 3), ("n\n", 1)])
    def test_malformed_reports_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line

    def test_header_too_small(self):
        with pytest.raises(GraphValidationError):
            parse_edge_list("n 2\n0 5")

    @given(graphs(max_n=9))
    def test_roundtrip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g


class TestGraph6:
    def test_known_string(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert encode_graph6(g) == b"D?{"
        ref = nx.from_graph6_bytes(b"D?{")
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())

    def test_single_vertex(self):
        assert encode_graph6(Graph.empty(1)) == b"@"
        assert parse_graph6(b"@") == Graph.empty(1)

    def test_empty_graph(self):
        assert encode_graph6(Graph.empty(0)) == b"?"

    def test_c4_roundtrip(self):
        c4 = gen.cycle(4)
        assert parse_graph6(encode_graph6(c4)) == c4

    def test_header_tolerated(self):
        assert parse_graph6(b">>graph6<<D?{\n") == parse_graph6(b"D?{")

    @pytest.mark.parametrize("bad", [b"D?{\x7f", b"D? {", b"D?", b"D?{?", b"~?", b"D?|"])
    def test_format_errors(self, bad):
        with pytest.raises(FormatError):
            parse_graph6(bad)

    def test_large_n_header(self):
        g = gen.path(70)
        data = encode_graph6(g)
        assert data[0] == 126
        assert parse_graph6(data) == g

    def test_matches_networkx_encoder(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng.randrange(1, 70), rng.random(), rng)
            G = nx.Graph()
            G.add_nodes_from(range(g.n))
            G.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(G, header=False).strip()
            assert encode_graph6(g) == expected

    @given(graphs(max_n=12))
    @settings(max_examples=200)
    def test_decode_encode_identity(self, g):
        data = encode_graph6(g)
        assert parse_graph6(data) == g
        assert encode_graph6(parse_graph6(data)) == data


class TestGenerators:
    def test_cycle4(self):
        g = gen.cycle(4)
        assert (g.n, g.num_edges) == (4, 4)

    @pytest.mark.parametrize(
        "make, n, m",
        [(gen.fig3a, 12, 15), (gen.fig3b, 14, 20), (gen.fig3c, 16, 24)],
    )
    def test_extremal_graph_sizes(self, make, n, m):
        g = make()
        assert (g.n, g.num_edges) == (n, m)
        assert _symmetric_simple(g)

    def test_fig3_degrees(self):
        # fig3a: spoke ends have degree 3, the rest 2
        assert sorted(gen.fig3a().degree(v) for v in range(12)) == [2] * 6 + [3] * 6
        # fig3c: every vertex has one cross edge
        assert {gen.fig3c().degree(v) for v in range(16)} == {3}

    @pytest.mark.parametrize("k, kp", [(1, 1), (2, 1), (2, 2), (3, 3)])
    def test_spider_counts(self, k, kp):
        g = gen.spider(k, kp)
        assert g.n == 6 * k + 3 * k + 3 * kp + 1
        assert g.num_edges == g.n - 1
        assert g.degree(3 * k) == 3
        assert len(connected_components(g)) == 1

    def test_spider_1_1(self):
        g = gen.spider(1, 1)
        assert g.n == 13
        assert g.degree(3) == 3

    def test_grid(self):
        g = gen.grid(3, 3)
        assert (g.n, g.num_edges) == (9, 12)

    def test_gnp_deterministic(self):
        assert gen.gnp(20, 0.3, seed=5) == gen.gnp(20, 0.3, seed=5)
        assert gen.gnp(20, 0.3, seed=5) != gen.gnp(20, 0.3, seed=6)
        assert gen.gnp(10, 0.0, 1).num_edges == 0
        assert gen.gnp(10, 1.0, 1).num_edges == 45

    def test_splitmix_reference_values(self):
        # SplitMix64 reference stream for seed 1234567
        rng = gen.SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(3)] == [
            6457827717110365317, 3203168211198807973, 9817491932198370423,
        ]

    @pytest.mark.parametrize("call", [
        lambda: gen.cycle(2), lambda: gen.path(0), lambda: gen.grid(0, 3),
        lambda: gen.spider(0, 1), lambda: gen.gnp(5, 1.5), lambda: gen.generate("nope"),
        lambda: gen.parse_generator("cycle:"), lambda: gen.parse_generator("path:a"),
        lambda: gen.parse_generator("fig3a:3"),
    ])
    def test_parameter_errors(self, call):
        with pytest.raises(ParameterError):
            call()

    def test_parse_generator(self):
        assert gen.parse_generator("cycle:5") == gen.cycle(5)
        assert gen.parse_generator("grid:5x4") == gen.grid(5, 4)
        assert gen.parse_generator("grid:5,4") == gen.grid(5, 4)
        assert gen.parse_generator("gnp:40,0.1,seed=7") == gen.gnp(40, 0.1, seed=7)
        assert gen.parse_generator("fig3b") == gen.fig3b()


class TestComponents:
    def test_c4(self):
        assert connected_components(gen.cycle(4)) == [[0, 1, 2, 3]]

    def test_two_edges(self):
        assert connected_components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]

    def test_empty(self):
        assert connected_components(Graph.empty(3)) == [[0], [1], [2]]

    @given(graphs(max_n=10))
    def test_partition_matches_networkx(self, g):
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        expected = sorted(sorted(c) for c in nx.connected_components(G))
        assert connected_components(g) == expected


def test_graph_validation():
    with pytest.raises(GraphValidationError):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(0, 2)])
