import networkx as nx
import pytest
from hypothesis import given

from twosc.core import Graph
from twosc.io import (
    FormatError,
    dot_encode,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    ingest_graph6,
    read_graph6,
    write_graph6,
)
from twosc.graphs import capped_k33, complete_bipartite, cycle_graph, empty_graph, petersen_graph

from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestGraph6:
    def test_cycle_roundtrip(self):
        g = cycle_graph(4)
        assert graph6_decode(graph6_encode(g)) == g

    @given(graphs(max_n=8))
    def test_roundtrip(self, g):
        assert graph6_decode(graph6_encode(g)) == g

    @given(graphs(max_n=8))
    def test_matches_networkx_encoding(self, g):
        ours = graph6_encode(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs

    @given(graphs(max_n=8))
    def test_decodes_networkx_encoding(self, g):
        record = nx.to_graph6_bytes(to_nx(g), header=True).decode().strip()
        assert graph6_decode(record) == g

    def test_header_stripped(self):
        g = petersen_graph()
        assert graph6_decode(">>graph6<<" + graph6_encode(g)) == g

    def test_empty_and_single(self):
        assert graph6_encode(Graph(())) == "?"
        assert graph6_decode("?") == Graph(())
        assert graph6_decode(graph6_encode(Graph((0,)))) == Graph((0,))

    def test_long_size_form(self):
        g = Graph.from_edges(63, [(i, i + 1) for i in range(62)])
        record = graph6_encode(g)
        assert record.startswith("~")
        assert graph6_decode(record) == g
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert record == theirs

    def test_too_many_vertices_rejected(self):
        record = nx.to_graph6_bytes(nx.empty_graph(65), header=False).decode().strip()
        with pytest.raises(FormatError):
            graph6_decode(record)

    def test_malformed_records(self):
        with pytest.raises(FormatError):
            graph6_decode("")
        with pytest.raises(FormatError):
            graph6_decode("C")  # truncated body
        with pytest.raises(FormatError):
            graph6_decode("C" + chr(0x20))  # byte below 63
        with pytest.raises(FormatError):
            graph6_decode("@" + "A")  # n=1 needs no body


class TestGraph6Streams:
    def test_file_order_and_line_numbers(self, tmp_path):
        path = tmp_path / "cat.g6"
        gs = [cycle_graph(4), capped_k33(), complete_bipartite(2, 3)]
        with open(path, "w") as handle:
            write_graph6(gs, handle)
        assert list(ingest_graph6(str(path))) == gs

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.g6"
        path.write_text("")
        assert list(ingest_graph6(str(path))) == []

    def test_truncated_record_reports_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text(graph6_encode(cycle_graph(4)) + "\nD\n")
        with pytest.raises(FormatError) as err:
            list(ingest_graph6(str(path)))
        assert err.value.line == 2

    def test_blank_lines_skipped(self):
        import io

        text = "\n" + graph6_encode(cycle_graph(4)) + "\n\n"
        assert list(read_graph6(io.StringIO(text))) == [cycle_graph(4)]


class TestEdgeList:
    def test_roundtrip(self):
        g = capped_k33()
        assert edge_list_decode(edge_list_encode(g)) == g

    def test_comments_and_blanks(self):
        text = "# a comment\n\n4\n0 1  # inline\n2 3\n"
        assert edge_list_decode(text) == Graph.from_edges(4, [(0, 1), (2, 3)])

    def test_errors_carry_line(self):
        with pytest.raises(FormatError) as err:
            edge_list_decode("4\n0 9\n")
        assert err.value.line == 2
        with pytest.raises(FormatError):
            edge_list_decode("4\n1 1\n")
        with pytest.raises(FormatError):
            edge_list_decode("")


class TestDot:
    def test_exact_output(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        assert dot_encode(g) == "graph G {\n  3;\n  0 -- 1;\n  1 -- 2;\n}\n"

    def test_every_vertex_appears(self):
        out = dot_encode(empty_graph(3))
        for v in range(3):
            assert f"{v};" in out
