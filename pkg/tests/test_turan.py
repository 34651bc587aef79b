from math import comb

import pytest

from oracles import max_pattern_free_edges_brute
from nimcolor.errors import ResourceLimitError, TuranUnavailableError
from nimcolor.graphs import SimpleGraph, components, is_isomorphic, join
from nimcolor.nim import contains
from nimcolor.patterns import forest_union, make_double_star, make_path, make_spider, make_star, parse_pattern
from nimcolor.turan import (
    ex_balanced_forest,
    ex_path,
    extremal_path_graph,
    lemma_gap,
    near_extremal_path_graph,
    path_extremal_t_range,
    turan_oracle,
    turan_value,
)


class TestExPath:
    @pytest.mark.parametrize(
        "n,length,value",
        [
            (13, 4, 12),  # 13 = 4*3 + 1
            (3, 4, 3),  # a triangle has no 4-vertex path
            (16, 4, 15),  # 16 = 5*3 + 1
            (7, 4, 6),
            (27, 6, 51),  # 27 = 5*5 + 2
            (5, 3, 2),  # matchings
            (0, 4, 0),
            (6, 2, 0),  # forbidding a single edge
        ],
    )
    def test_values(self, n, length, value):
        assert ex_path(n, length).value == value

    def test_recipe_records_split(self):
        r = ex_path(13, 4)
        assert r.recipe["a"] == 4 and r.recipe["b"] == 1
        assert r.recipe["t_range"] == [0, 1, 2, 3, 4]

    def test_unique_case_t_range(self):
        # odd length: only the clique decomposition is extremal
        assert list(path_extremal_t_range(9, 5)) == [2]
        # even length but remainder outside the split window
        assert list(path_extremal_t_range(6, 4)) == [2]

    def test_rejects_short_paths(self):
        with pytest.raises(ValueError):
            ex_path(5, 1)

    def test_monotone_in_n(self):
        for length in (3, 4, 5, 6, 8):
            values = [ex_path(n, length).value for n in range(0, 50)]
            assert all(a <= b for a, b in zip(values, values[1:]))


class TestExtremalPathGraph:
    def test_13_4_t2_structure(self):
        from nimcolor.graphs import disjoint_union

        g = extremal_path_graph(13, 4, 2)
        assert g.edge_count == 12
        star7 = join(SimpleGraph.complete(1), SimpleGraph.empty(6))
        target = disjoint_union(disjoint_union(SimpleGraph.complete(3), SimpleGraph.complete(3)), star7)
        assert is_isomorphic(g, target)

    def test_13_4_t4_is_clique_partition(self):
        g = extremal_path_graph(13, 4, 4)
        assert g.edge_count == 12
        assert sorted(len(c) for c in components(g)) == [1, 3, 3, 3, 3]

    def test_7_4_t0_is_star(self):
        g = extremal_path_graph(7, 4, 0)
        assert g.edge_count == 6
        assert g.degree_sequence() == (6, 1, 1, 1, 1, 1, 1)
        assert not contains(g, make_path(4))

    def test_invalid_t_rejected_with_context(self):
        with pytest.raises(ValueError, match="allowed t"):
            extremal_path_graph(9, 5, 0)

    @pytest.mark.parametrize("length", [4, 6])
    def test_all_recipe_graphs_are_path_free_and_extremal(self, length):
        for n in range(length, 25):
            for t in path_extremal_t_range(n, length):
                g = extremal_path_graph(n, length, t)
                assert g.edge_count == ex_path(n, length).value
                assert not contains(g, make_path(length))


class TestNearExtremalFamily:
    def test_deficit_bounded_by_choose_k_2(self):
        # the t-clique family misses the optimum by at most C(k,2); for k=2
        # the bound is attained exactly when 2k-1 divides n
        for k in (2, 3):
            q = 2 * k - 1
            for n in range(k - 1, 61):
                t = 0
                while n - t * q - (k - 1) >= 0:
                    gap = ex_path(n, 2 * k).value - near_extremal_path_graph(n, k, t).edge_count
                    assert 0 <= gap <= comb(k, 2), (k, n, t, gap)
                    if k == 2:
                        assert (gap == 1) == (n % q == 0), (n, t, gap)
                    else:
                        assert gap < (k - 1) ** 2
                    t += 1

    def test_family_members_avoid_the_path(self):
        for k, n, t in ((2, 12, 1), (3, 30, 2)):
            assert not contains(near_extremal_path_graph(n, k, t), make_path(2 * k))

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            near_extremal_path_graph(5, 2, 2)


class TestBalancedForestFormula:
    def test_two_disjoint_edges(self):
        h = forest_union(make_path(2), make_path(2))
        r = ex_balanced_forest(10, h)
        assert r.value == 9
        assert r.method == "bushaw_kettle"
        assert r.below_threshold  # the certified range starts absurdly high

    def test_double_star_plus_path(self):
        h = parse_pattern("dstar:3+path:6")
        for n in (20, 21, 24, 100):
            assert ex_balanced_forest(n, h).value == 5 * (n - 5)

    def test_two_p4s(self):
        h = forest_union(make_path(4), make_path(4))
        assert ex_balanced_forest(20, h).value == comb(3, 2) + 3 * 17 == 54

    def test_rejects_connected(self):
        with pytest.raises(ValueError, match="two components"):
            ex_balanced_forest(20, make_path(4))

    def test_rejects_odd_order(self):
        h = forest_union(make_path(3), make_path(2))
        with pytest.raises(ValueError, match="even order"):
            ex_balanced_forest(20, h)

    def test_rejects_unbalanced(self):
        h = forest_union(make_star(3), make_path(4))
        with pytest.raises(ValueError, match="balanced"):
            ex_balanced_forest(20, h)


class TestOracle:
    def test_p3_free_is_a_matching(self):
        assert turan_oracle(5, make_path(3)).value == 2

    def test_agrees_with_formula_spot(self):
        assert turan_oracle(7, make_path(4)).value == ex_path(7, 4).value == 6

    def test_claw_free_on_six_vertices(self):
        r = turan_oracle(6, make_star(3))
        assert r.value == 6
        # claw-free means maximum degree two
        assert max(r.witness.degree(v) for v in range(6)) <= 2

    def test_witness_attached_and_pattern_free(self):
        r = turan_oracle(6, make_path(4))
        assert r.witness.edge_count == r.value == 6
        assert not contains(r.witness, make_path(4))

    def test_matches_exhaustive_subset_enumeration(self):
        # full 2^m sweep as the independent reference at tiny sizes
        for n, h in ((4, make_path(3)), (5, make_path(4)), (5, make_star(3)), (5, make_spider([2, 1]))):
            assert turan_oracle(n, h).value == max_pattern_free_edges_brute(n, h.graph)

    def test_spider_and_double_star_small(self):
        assert turan_oracle(6, make_spider([2, 2])).value == ex_path(6, 5).value
        assert turan_oracle(7, make_double_star(2)).value == ex_path(7, 4).value

    def test_size_limits(self):
        with pytest.raises(ResourceLimitError):
            turan_oracle(11, make_path(4))
        with pytest.raises(ResourceLimitError):
            turan_oracle(8, make_path(13))


class TestLemmaGap:
    @pytest.mark.parametrize(
        "n1,n2,c,length,lhs,rhs",
        [
            (10, 10, 3, 4, 18, 22),
            (6, 6, 0, 4, 12, 15),
            (4, 4, 1, 4, 6, 12),
        ],
    )
    def test_reference_values(self, n1, n2, c, length, lhs, rhs):
        assert lemma_gap(n1, n2, c, length) == (lhs, rhs)

    def test_strict_on_sample(self):
        for length in (4, 6):
            for n1 in range(length, 20):
                for c in range(0, n1 - length + 1):
                    lhs, rhs = lemma_gap(n1, 15, c, length)
                    assert lhs < rhs

    def test_preconditions(self):
        with pytest.raises(ValueError):
            lemma_gap(3, 5, 4, 4)
        with pytest.raises(ValueError):
            lemma_gap(5, 5, 0, 1)


class TestDispatcher:
    def test_paths_use_formula(self):
        assert turan_value(40, make_path(4)).method == "faudree_schelp"

    def test_balanced_forests_use_formula(self):
        h = parse_pattern("dstar:3+path:6")
        assert turan_value(50, h).method == "bushaw_kettle"

    def test_small_everything_else_uses_oracle(self):
        assert turan_value(6, make_star(3)).method == "oracle"

    def test_unavailable(self):
        with pytest.raises(TuranUnavailableError):
            turan_value(30, make_star(3))
        with pytest.raises(TuranUnavailableError):
            turan_value(6, make_star(3), allow_oracle=False)
