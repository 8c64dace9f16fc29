import pytest

from twosc.canon import are_isomorphic
from twosc.core import Graph, complement, edit
from twosc.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    capped_k33,
    star_graph,
)
from twosc.recognition import (
    NotTwoSelfCenteredError,
    check_bipartite_proposition,
    check_triangle_free_lemma,
    condition_verdict,
    critical_triples,
    edge_maximal_by_definition,
    greedy_edge_maximal,
    greedy_edge_minimal,
    is_edge_maximal,
    is_edge_minimal,
    is_two_self_centered,
    metric_two_self_centered,
)


def five_cycle_with_chord() -> Graph:
    return edit(cycle_graph(5), add=(0, 2))


class TestTwoSelfCentered:
    def test_complete_graphs_are_not(self):
        for n in range(2, 7):
            verdict = is_two_self_centered(complete_graph(n))
            assert not verdict.is_2sc
            assert verdict.violating_vertex is not None

    def test_four_cycle_is(self):
        verdict = is_two_self_centered(cycle_graph(4))
        assert verdict.is_2sc
        assert verdict.violating_vertex is None and verdict.violating_pair is None

    def test_path_is_not(self):
        verdict = is_two_self_centered(path_graph(4))
        assert not verdict.is_2sc
        assert verdict.violating_pair == (0, 3)
        assert not metric_two_self_centered(path_graph(4))

    def test_star_is_not(self):
        assert not is_two_self_centered(star_graph(3)).is_2sc

    def test_petersen_is(self):
        assert is_two_self_centered(petersen_graph()).is_2sc

    def test_disconnected_is_not(self):
        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
        verdict = is_two_self_centered(g)
        assert not verdict.is_2sc and verdict.violating_pair is not None


class TestEdgeMaximal:
    def test_four_cycle(self):
        cert = is_edge_maximal(cycle_graph(4))
        assert cert.maximal
        assert [c.vertices for c in cert.components] == [(0, 2), (1, 3)]
        assert all(c.star for c in cert.components)

    def test_five_cycle_is_not(self):
        cert = is_edge_maximal(cycle_graph(5))
        assert not cert.maximal
        assert cert.complement_connected
        # the definitional route agrees: some chord keeps the property
        assert not edge_maximal_by_definition(cycle_graph(5))

    def test_star_forest_complement(self):
        # complement made of one two-leaf star and one single-edge star
        comp = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        g = complement(comp)
        cert = is_edge_maximal(g)
        assert cert.maximal
        assert edge_maximal_by_definition(g)

    def test_complete_bipartite_is_not(self):
        assert not is_edge_maximal(complete_bipartite(3, 3)).maximal

    def test_requires_two_self_centered(self):
        with pytest.raises(NotTwoSelfCenteredError):
            is_edge_maximal(path_graph(4))


class TestEdgeMinimal:
    def test_four_cycle(self):
        assert is_edge_minimal(cycle_graph(4)).minimal

    def test_petersen(self):
        assert is_edge_minimal(petersen_graph()).minimal

    def test_chorded_cycle_is_not(self):
        witness = is_edge_minimal(five_cycle_with_chord())
        assert not witness.minimal
        assert witness.removable_edge == (0, 2)

    def test_requires_two_self_centered(self):
        with pytest.raises(NotTwoSelfCenteredError):
            is_edge_minimal(complete_graph(4))


class TestCriticalTriples:
    def test_complete_bipartite_has_none(self):
        assert critical_triples(complete_bipartite(3, 3)) == []

    def test_four_cycle_has_none(self):
        assert critical_triples(cycle_graph(4)) == []

    def test_capped_bipartite_apex(self):
        triples = {(t.x, t.u, t.v) for t in critical_triples(capped_k33())}
        assert (0, 1, 2) in triples  # the apex covers its two anchors

    def test_requires_two_self_centered(self):
        with pytest.raises(NotTwoSelfCenteredError):
            critical_triples(path_graph(4))


class TestBipartiteProposition:
    def test_complete_bipartite(self):
        assert check_bipartite_proposition(complete_bipartite(2, 3))

    def test_five_cycle(self):
        assert check_bipartite_proposition(cycle_graph(5))

    def test_six_cycle(self):
        assert check_bipartite_proposition(cycle_graph(6))

    def test_works_on_arbitrary_graphs(self):
        assert check_bipartite_proposition(path_graph(4))
        assert check_bipartite_proposition(complete_graph(5))


class TestTriangleFreeLemma:
    def test_petersen(self):
        assert check_triangle_free_lemma(petersen_graph())

    def test_four_cycle(self):
        assert check_triangle_free_lemma(cycle_graph(4))

    def test_vacuous_with_triangles(self):
        from twosc.graphs import minimal_with_triangle

        assert check_triangle_free_lemma(minimal_with_triangle())


class TestSandwich:
    def test_shrink_chorded_cycle(self):
        assert greedy_edge_minimal(five_cycle_with_chord()) == cycle_graph(5)

    def test_grow_five_cycle(self):
        grown = greedy_edge_maximal(cycle_graph(5))
        assert sorted(grown.edges()) == sorted(cycle_graph(5).edges() + [(0, 2), (1, 3)])
        assert is_edge_maximal(grown).maximal

    def test_fixed_points(self):
        assert greedy_edge_minimal(cycle_graph(4)) == cycle_graph(4)
        assert greedy_edge_maximal(cycle_graph(4)) == cycle_graph(4)

    def test_sandwich_brackets_input(self):
        g = five_cycle_with_chord()
        sub = greedy_edge_minimal(g)
        sup = greedy_edge_maximal(g)
        assert set(sub.edges()) <= set(g.edges()) <= set(sup.edges())
        assert is_edge_minimal(sub).minimal
        assert is_edge_maximal(sup).maximal
