import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from twosc.core import Graph, has_triangle
from twosc.enumeration import graph_classes
from twosc.graphs import complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph
from twosc.sbic import (
    HasTriangleError,
    SbicWitness,
    WitnessError,
    construct_sbic,
    verify_sbic,
)


def witness(a, b) -> SbicWitness:
    return SbicWitness.from_families(a, b)


class TestVerify:
    def test_single_vertex(self):
        x = empty_graph(1)
        assert verify_sbic(x, witness([[0]], [[0]])).passed

    def test_two_isolated_vertices_cohoused(self):
        x = empty_graph(2)
        report = verify_sbic(x, witness([[0, 1]], [[0, 1]]))
        assert report.passed

    def test_two_isolated_vertices_apart_fail(self):
        x = empty_graph(2)
        report = verify_sbic(x, witness([[0], [1]], [[0], [1]]))
        assert not report.distant_pairs_share_set.ok
        assert report.distant_pairs_share_set.counterexample == {"pair": [0, 1]}

    def test_path_cover_gap(self):
        x = path_graph(4)
        report = verify_sbic(x, witness([[0, 2]], [[1, 3]]))
        assert not report.covering.ok
        assert not report.passed

    def test_dependent_set_rejected_by_covering(self):
        x = path_graph(3)
        report = verify_sbic(x, witness([[0, 1], [2]], [[0, 2], [1]]))
        assert not report.covering.ok
        assert report.covering.counterexample["edge"] == [0, 1]

    def test_triangle_condition(self):
        x = complete_graph(3)
        report = verify_sbic(x, witness([[0], [1], [2]], [[0], [1], [2]]))
        assert not report.triangle_free.ok

    def test_escape_conditions(self):
        # path a-b-c-d: vertex 3 is far from {0}, so some disjoint set of the
        # other family must hold it
        x = path_graph(4)
        good = witness([[0], [1], [2], [3], [0, 3]], [[0], [1], [2], [3], [0, 3]])
        assert verify_sbic(x, good).passed
        lacking = witness([[0], [1], [2], [3], [0, 3]], [[0, 3], [1], [2]])
        report = verify_sbic(x, lacking)
        assert not report.a_far_vertices_escape.ok

    def test_empty_families_only_for_empty_core(self):
        assert verify_sbic(Graph(()), SbicWitness((), ())).passed
        report = verify_sbic(empty_graph(1), SbicWitness((), ()))
        assert not report.passed and not report.covering.ok

    def test_out_of_range_raises(self):
        with pytest.raises(WitnessError):
            verify_sbic(empty_graph(2), SbicWitness((0b100,), (0b01,)))

    def test_empty_set_rejected(self):
        with pytest.raises(WitnessError):
            SbicWitness((0,), (1,))


class TestConstruct:
    def test_single_vertex(self):
        w = construct_sbic(empty_graph(1))
        assert w.families() == ([[0]], [[0]])

    def test_edgeless_triple(self):
        x = empty_graph(3)
        w = construct_sbic(x)
        assert verify_sbic(x, w).passed

    def test_six_cycle_antipodes_cohoused(self):
        x = cycle_graph(6)
        w = construct_sbic(x)
        report = verify_sbic(x, w)
        assert report.passed
        for u, v in ((0, 3), (1, 4), (2, 5)):
            pair = 1 << u | 1 << v
            assert any(m & pair == pair for m in w.a_masks + w.b_masks)

    def test_rejects_triangles(self):
        with pytest.raises(HasTriangleError):
            construct_sbic(complete_graph(3))

    def test_exhaustive_small_graphs(self):
        for n in range(1, 8):
            for g in graph_classes(n):
                if has_triangle(g):
                    continue
                assert verify_sbic(g, construct_sbic(g)).passed, g

    def test_exhaustive_eight_vertices(self):
        checked = 0
        for g in graph_classes(8):
            if has_triangle(g):
                continue
            assert verify_sbic(g, construct_sbic(g)).passed, g
            checked += 1
        assert checked > 0


class TestFamilyOrderStability:
    @given(st.randoms(use_true_random=False))
    @settings(max_examples=30)
    def test_permutation_stable(self, rng):
        x = cycle_graph(6)
        w = construct_sbic(x)
        a, b = [list(m) for m in (w.a_masks, w.b_masks)]
        rng.shuffle(a)
        rng.shuffle(b)
        assert verify_sbic(x, SbicWitness(tuple(a), tuple(b))).passed

    def test_diameter_two_pairs_vacuous(self):
        # connected, triangle-free, diameter 2: the far-pair condition never fires
        for x in (complete_bipartite(3, 3), cycle_graph(5)):
            singletons = [[v] for v in range(x.n)]
            report = verify_sbic(x, witness(singletons, singletons))
            assert report.distant_pairs_share_set.ok
