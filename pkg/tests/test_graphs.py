import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nimcolor.graphs import (
    EdgeColoring,
    SimpleGraph,
    all_pairs,
    color_class_dot,
    complement,
    complete_edge_count,
    components,
    disjoint_union,
    edge_index,
    edge_unindex,
    is_isomorphic,
    join,
    to_dot,
)


class TestEdgeIndex:
    def test_first_pair(self):
        assert edge_index(0, 1, 4) == 0

    def test_last_pair_of_k4(self):
        assert edge_index(2, 3, 4) == 5

    def test_rank_matches_lex_enumeration_of_k5(self):
        # derived by enumerating pairs of K_5 in lexicographic order
        ranked = {pair: i for i, pair in enumerate(all_pairs(5))}
        assert ranked[(1, 3)] == 5
        assert edge_index(1, 3, 5) == 5

    def test_orientation_agnostic(self):
        assert edge_index(3, 1, 5) == edge_index(1, 3, 5)

    @pytest.mark.parametrize("u,v,n", [(0, 0, 4), (0, 4, 4), (-1, 2, 4), (5, 1, 4)])
    def test_invalid_arguments(self, u, v, n):
        with pytest.raises(ValueError):
            edge_index(u, v, n)

    def test_roundtrip_exhaustive_up_to_64(self):
        for n in range(2, 65):
            for i, (u, v) in enumerate(all_pairs(n)):
                assert edge_index(u, v, n) == i
                assert edge_unindex(i, n) == (u, v)

    def test_large_n_support(self):
        n = 4096
        m = complete_edge_count(n)
        assert edge_unindex(edge_index(4000, 4095, n), n) == (4000, 4095)
        assert edge_index(n - 2, n - 1, n) == m - 1

    @given(st.integers(min_value=2, max_value=200), st.data())
    def test_roundtrip_random(self, n, data):
        i = data.draw(st.integers(min_value=0, max_value=complete_edge_count(n) - 1))
        u, v = edge_unindex(i, n)
        assert u < v < n
        assert edge_index(u, v, n) == i


class TestSimpleGraph:
    def test_complete_graph_counts(self):
        g = SimpleGraph.complete(5)
        assert g.edge_count == 10
        assert g.degree_sequence() == (4, 4, 4, 4, 4)

    def test_no_loops_allowed(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(3, [(1, 1)])

    def test_edge_count_is_half_degree_sum(self):
        g = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (3, 4), (0, 2)])
        assert sum(g.degree(v) for v in range(5)) == 2 * g.edge_count

    def test_join_of_vertex_and_independent_set_is_star(self):
        star = join(SimpleGraph.complete(1), SimpleGraph.empty(3))
        assert star.degree_sequence() == (3, 1, 1, 1)
        assert star.edge_count == 3

    def test_disjoint_union_and_components(self):
        k3 = SimpleGraph.complete(3)
        g = disjoint_union(k3, k3)
        assert g.edge_count == 6
        assert components(g) == [[0, 1, 2], [3, 4, 5]]

    def test_complement_of_perfect_matching_is_c4(self):
        pm = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
        c4 = complement(pm)
        assert c4.edge_count == 4
        assert c4.degree_sequence() == (2, 2, 2, 2)
        assert is_isomorphic(c4, SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))

    def test_complement_involution(self):
        g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 5), (3, 4)])
        assert complement(complement(g)) == g

    def test_permuted_preserves_structure(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (1, 2)])
        h = g.permuted([3, 2, 1, 0])
        assert h.edge_count == g.edge_count
        assert h.has_edge(3, 2) and h.has_edge(2, 1)

    def test_isomorphism_rejects_c6_vs_two_triangles(self):
        c6 = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        two_k3 = disjoint_union(SimpleGraph.complete(3), SimpleGraph.complete(3))
        # same degree sequence, different component structure
        assert c6.degree_sequence() == two_k3.degree_sequence()
        assert not is_isomorphic(c6, two_k3)

    def test_isomorphism_accepts_relabeling(self):
        g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)])
        h = g.permuted([5, 3, 1, 0, 2, 4])
        assert is_isomorphic(g, h)


class TestEdgeColoring:
    def test_length_validation_message(self):
        with pytest.raises(ValueError, match="colors length 77 != 78"):
            EdgeColoring(13, 2, (0,) * 77)

    def test_color_range_validation(self):
        with pytest.raises(ValueError, match="not in 0..1"):
            EdgeColoring(3, 2, (0, 1, 2))

    def test_color_class_of_monochromatic_k3(self):
        c = EdgeColoring.monochromatic(3, k=2)
        assert c.color_class(0) == SimpleGraph.complete(3)
        assert c.color_class(1) == SimpleGraph.empty(3)

    def test_color_class_bad_index(self):
        c = EdgeColoring.monochromatic(3, k=2)
        with pytest.raises(ValueError):
            c.color_class(2)

    def test_classes_partition_all_edges(self, rng):
        for _ in range(20):
            n = rng.randrange(3, 9)
            k = rng.randrange(1, 5)
            c = EdgeColoring.random(n, k, rng)
            total = sum(c.color_class(i).edge_count for i in range(k))
            assert total == complete_edge_count(n)

    def test_json_roundtrip_bit_exact(self):
        c = EdgeColoring(4, 3, (0, 1, 2, 0, 1, 2))
        again = EdgeColoring.from_json(c.to_json())
        assert again == c
        payload = json.loads(c.to_json())
        assert set(payload) == {"n", "k", "colors"}

    def test_from_dict_missing_field(self):
        with pytest.raises(ValueError, match="missing field 'colors'"):
            EdgeColoring.from_dict({"n": 3, "k": 2})

    def test_recolored(self):
        c = EdgeColoring.monochromatic(3, k=2)
        c2 = c.recolored(1, 1)
        assert c2.colors == (0, 1, 0)
        assert c.colors == (0, 0, 0)


class TestDot:
    def test_dot_lists_edges_and_isolated_vertices(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (1, 2)])
        dot = to_dot(g)
        assert dot.startswith("graph G {")
        assert "  0 -- 1;" in dot and "  1 -- 2;" in dot
        assert "  3;" in dot

    def test_color_class_dot(self):
        c = EdgeColoring(3, 2, (0, 1, 1))
        dot = color_class_dot(c, 0)
        assert "0 -- 1" in dot and "2;" in dot
