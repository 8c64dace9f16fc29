import pytest
from hypothesis import given, settings

from twosc.core import (
    EdgeAbsentError,
    EdgePresentError,
    Graph,
    GraphError,
    LoopError,
    VertexLimitError,
    complement,
    connected_components,
    distance_profile,
    edit,
    is_independent,
    is_star,
    triangles,
)
from twosc.canon import are_isomorphic
from twosc.enumeration import graph_classes
from twosc.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    capped_k33,
)

from conftest import graphs


def floyd_warshall(g: Graph) -> list[list[int]]:
    """Independent all-pairs oracle; g.n doubles as the unreachable marker."""
    n = g.n
    inf = n
    dist = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            dik = dist[i][k]
            if dik >= inf:
                continue
            row_k = dist[k]
            row_i = dist[i]
            for j in range(n):
                alt = dik + row_k[j]
                if alt < row_i[j]:
                    row_i[j] = alt
    return [[min(d, inf) for d in row] for row in dist]


class TestDistanceProfile:
    def test_complete_graph(self):
        p = distance_profile(complete_graph(4))
        assert p.radius == 1 and p.diameter == 1

    def test_four_cycle(self):
        g = cycle_graph(4)
        p = distance_profile(g)
        assert [row[:] for row in map(list, p.distances)] == floyd_warshall(g)
        assert p.radius == 2 and p.diameter == 2

    def test_path(self):
        g = path_graph(4)
        p = distance_profile(g)
        assert [list(row) for row in p.distances] == floyd_warshall(g)
        assert p.radius == 2 and p.diameter == 3

    def test_disconnected_carries_sentinel(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        p = distance_profile(g)
        assert p.distances[0][2] == p.infinity == 4
        assert not p.connected
        assert p.radius == p.diameter == p.infinity

    def test_exhaustive_oracle_agreement_small(self):
        for n in range(1, 8):
            for g in graph_classes(n):
                p = distance_profile(g)
                assert [list(row) for row in p.distances] == floyd_warshall(g)

    @given(graphs(max_n=7))
    def test_oracle_agreement_random(self, g):
        p = distance_profile(g)
        assert [list(row) for row in p.distances] == floyd_warshall(g)

    @given(graphs(min_n=2, max_n=8))
    def test_metric_invariants(self, g):
        p = distance_profile(g)
        n = g.n
        for u in range(n):
            assert p.distances[u][u] == 0
            for v in range(n):
                assert p.distances[u][v] == p.distances[v][u]
                for w in range(n):
                    duv, dvw, duw = p.distances[u][v], p.distances[v][w], p.distances[u][w]
                    if duv < n and dvw < n:
                        assert duw <= duv + dvw
        if p.connected:
            assert p.radius <= p.diameter <= 2 * p.radius

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            distance_profile(Graph(()))


class TestComplement:
    def test_complete_graph(self):
        assert complement(complete_graph(4)) == empty_graph(4)

    def test_four_cycle_is_perfect_matching(self):
        assert sorted(complement(cycle_graph(4)).edges()) == [(0, 2), (1, 3)]

    def test_five_cycle_self_complementary(self):
        g = cycle_graph(5)
        assert are_isomorphic(complement(g), g)

    @given(graphs())
    def test_involution_and_edge_count(self, g):
        c = complement(g)
        assert complement(c) == g
        assert g.edge_count + c.edge_count == g.n * (g.n - 1) // 2


class TestComponents:
    def test_connected_cycle(self):
        assert connected_components(cycle_graph(4)) == [[0, 1, 2, 3]]

    def test_complement_of_cycle(self):
        assert connected_components(complement(cycle_graph(4))) == [[0, 2], [1, 3]]

    def test_edgeless(self):
        assert connected_components(empty_graph(3)) == [[0], [1], [2]]

    @given(graphs())
    def test_partition_properties(self, g):
        parts = connected_components(g)
        seen = sorted(v for part in parts for v in part)
        assert seen == list(range(g.n))
        for part in parts:
            inside = set(part)
            for v in part:
                # no edge may leave the part
                assert all(u in inside for u in g.neighbors(v))
            if len(part) > 1:
                # internally connected: every member reaches the first one
                p = distance_profile(g)
                assert all(p.distances[part[0]][v] < p.infinity for v in part)


class TestStars:
    def test_single_edge_is_star(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert is_star(g, [0, 1])

    def test_singleton_is_not(self):
        assert not is_star(empty_graph(1), [0])

    def test_triangle_is_not(self):
        assert not is_star(complete_graph(3), [0, 1, 2])

    def test_bigger_star(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert is_star(g, [0, 1, 2, 3])
        assert not is_star(edit(g, add=(1, 2)), [0, 1, 2, 3])


class TestTriangles:
    def test_bipartite_has_none(self):
        assert triangles(cycle_graph(4)) == []
        assert triangles(capped_k33()) == []

    def test_complete_four(self):
        assert triangles(complete_graph(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    @given(graphs())
    def test_empty_iff_neighborhoods_disjoint_on_edges(self, g):
        empty = not triangles(g)
        disjoint = all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())
        assert empty == disjoint


class TestIndependence:
    def test_empty_set(self):
        assert is_independent(cycle_graph(4), [])

    def test_bipartition_class(self):
        assert is_independent(complete_bipartite(3, 3), [0, 1, 2])

    def test_edge_endpoints(self):
        assert not is_independent(cycle_graph(4), [0, 1])


class TestEdit:
    def test_remove_gives_path(self):
        assert edit(cycle_graph(4), remove=(0, 3)) == path_graph(4)

    def test_add_diagonal_degree(self):
        g = edit(cycle_graph(4), add=(0, 2))
        assert g.degree(0) == 3 == g.n - 1

    def test_remove_then_readd(self):
        g = cycle_graph(4)
        assert edit(edit(g, remove=(0, 1)), add=(0, 1)) == g

    def test_original_unchanged(self):
        g = cycle_graph(4)
        edit(g, remove=(0, 1))
        assert g == cycle_graph(4)

    def test_errors(self):
        g = cycle_graph(4)
        with pytest.raises(EdgeAbsentError):
            edit(g, remove=(0, 2))
        with pytest.raises(EdgePresentError):
            edit(g, add=(0, 1))
        with pytest.raises(LoopError):
            edit(g, add=(2, 2))


class TestGraphValue:
    def test_symmetry_enforced(self):
        with pytest.raises(GraphError):
            Graph((0b10, 0b00))

    def test_loop_rejected(self):
        with pytest.raises(LoopError):
            Graph.from_edges(2, [(0, 0)])

    def test_vertex_limit(self):
        with pytest.raises(VertexLimitError):
            Graph.from_edges(65, [])

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_relabel_roundtrip(self):
        g = capped_k33()
        order = [3, 1, 4, 0, 6, 2, 5]
        h = g.relabel(order)
        assert h.edge_count == g.edge_count
        inverse = [0] * g.n
        for i, v in enumerate(order):
            inverse[v] = i
        assert h.relabel(inverse) == g
