import random

import pytest
from hypothesis import given, settings, strategies as st

from matchenergy.canon import canonical_certificate
from matchenergy.cuts import all_min_cut_sides, cut_size, edge_connectivity, has_trivial_min_cut
from matchenergy.graph import (FamilyParams, Graph, apex_family, build_graph, complete_graph, cycle_graph,
                               delete_edge, delete_vertex, delete_vertex_pair, disjoint_union, empty_graph,
                               operation_I, path_graph, relabel, split_family, star_graph)
from matchenergy import graph6
from matchenergy.verify import split_params

from .conftest import brute_canonical_code, brute_min_cut


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


class TestConstruction:
    def test_build_graph_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete_graph(3)
        assert g.size == 3

    def test_build_graph_empty(self):
        g = build_graph(2, [])
        assert g.n == 2 and g.size == 0

    def test_duplicate_edges_collapse(self):
        assert build_graph(4, [(0, 1), (0, 1), (1, 0)]).size == 1

    @pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
    def test_build_graph_rejects(self, edges):
        with pytest.raises(ValueError):
            build_graph(3, edges)

    def test_graph_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_complete_graph(self):
        assert complete_graph(4).size == 6
        assert complete_graph(1).size == 0
        assert complete_graph(5).degrees() == [4] * 5
        with pytest.raises(ValueError):
            complete_graph(0)

    @given(graphs())
    def test_size_is_half_degree_sum(self, g):
        assert 2 * g.size == sum(g.degrees())


class TestFamilies:
    def test_apex_5_1(self):
        g = apex_family(5, 1)
        assert g.size == 7
        assert edge_connectivity(g)[0] == 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_apex_full_is_complete(self, n):
        assert canonical_certificate(apex_family(n, n - 1)) == canonical_certificate(complete_graph(n))

    def test_apex_6_3_matches_brute_cut(self):
        g = apex_family(6, 3)
        assert edge_connectivity(g)[0] == brute_min_cut(g) == 3

    def test_split_6_2_3(self):
        g = split_family(6, 2, 3)
        assert g.size == 3 + 3 + 2 == len(g.edges())

    def test_split_4_1_2(self):
        g = split_family(4, 1, 2)
        assert sorted(g.edges()) == [(0, 1), (0, 2), (2, 3)]
        assert g.is_connected()
        assert edge_connectivity(g)[0] == brute_min_cut(g) == 1

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_split_balanced_cross_edges_disjoint(self, m):
        g = split_family(2 * m, m, m)
        cross = [(u, v) for u, v in g.edges() if (u < m) != (v < m)]
        assert len(cross) == m
        assert len({x for e in cross for x in e}) == 2 * m

    @pytest.mark.parametrize("n,k,m", [(6, 4, 3), (6, 2, 4), (6, 0, 2)])
    def test_split_rejects(self, n, k, m):
        with pytest.raises(ValueError):
            split_family(n, k, m)

    @pytest.mark.parametrize("n,k", [(1, 1), (4, 0), (4, 4)])
    def test_apex_rejects(self, n, k):
        with pytest.raises(ValueError):
            apex_family(n, k)

    def test_family_params(self):
        assert FamilyParams(5, 2).build() == apex_family(5, 2)
        assert FamilyParams(6, 2, 3).build() == split_family(6, 2, 3)
        with pytest.raises(ValueError):
            FamilyParams(6, 4, 3).validate()

    @pytest.mark.parametrize("n", range(4, 13))
    def test_split_connectivity_and_cross_cut(self, n):
        for k, m in split_params(n):
            g = split_family(n, k, m)
            kappa, _ = edge_connectivity(g)
            assert kappa == k
            assert cut_size(g, sum(1 << v for v in range(n - m, n))) == k

    @pytest.mark.parametrize("n", range(2, 13))
    def test_apex_connectivity(self, n):
        for k in range(1, n):
            g = apex_family(n, k)
            assert edge_connectivity(g)[0] == k
            if k < n - 1:
                assert has_trivial_min_cut(g)

    @pytest.mark.parametrize("n", range(4, 15))
    def test_edge_count_difference(self, n):
        for k, m in split_params(n):
            assert apex_family(n, k).size - split_family(n, k, m).size == (m - 1) * (n - m - 1)


class TestSubgraphOps:
    def test_delete_edge_triangle_gives_path(self):
        g = delete_edge(complete_graph(3), 0, 1)
        assert canonical_certificate(g) == canonical_certificate(path_graph(3))

    def test_delete_vertex(self):
        assert delete_vertex(complete_graph(4), 0) == complete_graph(3)

    def test_delete_vertex_reindexes_in_order(self):
        g = delete_vertex(path_graph(5), 1)
        assert g.edges() == [(1, 2), (2, 3)]

    def test_delete_vertex_pair(self):
        g = delete_vertex_pair(complete_graph(5), 4, 1)
        assert g == complete_graph(3)

    def test_disjoint_union(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        assert g.n == 4 and g.size == 2 and len(g.components()) == 2

    def test_missing_things(self):
        with pytest.raises(ValueError):
            delete_edge(path_graph(3), 0, 2)
        with pytest.raises(ValueError):
            delete_vertex(path_graph(3), 3)
        with pytest.raises(ValueError):
            delete_vertex_pair(path_graph(3), 1, 1)

    def test_immutable(self):
        g = complete_graph(3)
        delete_edge(g, 0, 1)
        assert g.size == 3
        with pytest.raises(Exception):
            g.n = 4


class TestOperationI:
    def fig2_graph(self):
        # K_3 on {0,1,2}, K_3 on {3,4,5}, cross edges 0-3 and 0-4.
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (0, 4)]
        return build_graph(6, edges)

    def test_makes_cross_edges_independent(self):
        g2 = operation_I(self.fig2_graph(), v2=4, u1=0, u2=1)
        cross = [(u, v) for u, v in g2.edges() if (u < 3) != (v < 3)]
        assert sorted(cross) == [(0, 3), (1, 4)]

    def test_result_isomorphic_to_split_family(self):
        g2 = operation_I(self.fig2_graph(), v2=4, u1=0, u2=1)
        assert canonical_certificate(g2) == canonical_certificate(split_family(6, 2, 3))

    def test_size_preserved(self):
        g1 = self.fig2_graph()
        g2 = operation_I(g1, 4, 0, 2)
        assert (g2.n, g2.size) == (g1.n, g1.size)

    @pytest.mark.parametrize("args,msg", [
        ((5, 0, 1), "not an edge"),
        ((4, 0, 0), "distinct"),
        ((3, 0, 4), "already an edge"),
        ((4, 0, 9), "not in graph"),
    ])
    def test_preconditions(self, args, msg):
        with pytest.raises(ValueError, match=msg):
            operation_I(self.fig2_graph(), *args)

    def test_pendant_u1_rejected(self):
        with pytest.raises(ValueError, match="no edge besides"):
            operation_I(path_graph(3), v2=1, u1=0, u2=2)


class TestCuts:
    def test_complete(self):
        assert edge_connectivity(complete_graph(5))[0] == 4

    def test_path(self):
        kappa, w = edge_connectivity(path_graph(6))
        assert kappa == 1 and w.size == 1

    def test_disconnected(self):
        kappa, w = edge_connectivity(disjoint_union(complete_graph(3), complete_graph(2)))
        assert kappa == 0 and w.size == 0 and w.side == frozenset({3, 4})

    def test_too_small(self):
        with pytest.raises(ValueError):
            edge_connectivity(complete_graph(1))

    def test_apex_7_3(self):
        assert edge_connectivity(apex_family(7, 3))[0] == brute_min_cut(apex_family(7, 3)) == 3

    def test_against_subset_oracle(self, connected_upto7, random_graphs):
        graphs = connected_upto7 + [g for g in random_graphs if g.is_connected()]
        for g in (g for g in graphs if g.n >= 2):
            kappa, w = edge_connectivity(g)
            assert kappa == brute_min_cut(g)
            assert w.size == kappa == cut_size(g, sum(1 << v for v in w.side))
            assert 1 <= len(w.side) <= g.n // 2
            assert kappa <= g.min_degree

    def test_min_cut_sides_c4(self):
        sides = {w.side for w in all_min_cut_sides(cycle_graph(4))}
        assert sides == {frozenset({v}) for v in range(4)} | {frozenset({0, 1}), frozenset({0, 3})}
        assert all(w.size == 2 for w in all_min_cut_sides(cycle_graph(4)))

    def test_min_cut_sides_k4(self):
        ws = all_min_cut_sides(complete_graph(4))
        assert [w.side for w in ws] == [frozenset({v}) for v in range(4)]
        assert all(w.trivial for w in ws)

    def test_min_cut_sides_k2(self):
        ws = all_min_cut_sides(complete_graph(2))
        assert len(ws) == 1 and ws[0].trivial

    def test_min_cut_sides_bound(self):
        with pytest.raises(ValueError):
            all_min_cut_sides(path_graph(17))

    def test_has_trivial_min_cut(self):
        assert has_trivial_min_cut(apex_family(6, 2))
        g = split_family(8, 2, 4)
        assert g.min_degree == 3 and not has_trivial_min_cut(g)
        assert has_trivial_min_cut(complete_graph(3))

    def test_side_bound_for_nontrivial_cut_graphs(self, connected_upto7):
        for g in connected_upto7[1:]:
            kappa, _ = edge_connectivity(g)
            if g.min_degree > kappa:
                assert all(len(w.side) >= max(kappa, 2) for w in all_min_cut_sides(g))


class TestCanonical:
    def test_relabelled_triangle(self):
        assert canonical_certificate(complete_graph(3)) == canonical_certificate(relabel(complete_graph(3), [2, 0, 1]))

    def test_path_vs_triangle(self):
        assert canonical_certificate(path_graph(3)) != canonical_certificate(complete_graph(3))

    def test_eleven_classes_on_four_vertices(self):
        pairs = [(i, j) for j in range(4) for i in range(j)]
        labelled = [build_graph(4, [p for b, p in enumerate(pairs) if bits >> b & 1]) for bits in range(64)]
        oracle = {brute_canonical_code(g) for g in labelled}
        certs = {canonical_certificate(g) for g in labelled}
        assert len(oracle) == len(certs) == 11

    def test_agrees_with_permutation_oracle(self, random_graphs):
        small = [g for g in random_graphs if g.n <= 7][:120]
        for a in small:
            for b in small[:25]:
                if a.n == b.n:
                    same = brute_canonical_code(a) == brute_canonical_code(b)
                    assert same == (canonical_certificate(a) == canonical_certificate(b))

    def test_permutation_invariance(self):
        rng = random.Random(3)
        tests = [complete_graph(6), cycle_graph(8), star_graph(5), split_family(10, 3, 4),
                 apex_family(9, 4), build_graph(7, [(0, 1), (1, 2), (3, 4)])]
        for g in tests:
            cert = canonical_certificate(g)
            for _ in range(100):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_certificate(relabel(g, perm)) == cert

    @settings(max_examples=60)
    @given(graphs(max_n=10), st.randoms(use_true_random=False))
    def test_certificate_is_a_relabelling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        cert = canonical_certificate(relabel(g, perm))
        assert cert == canonical_certificate(g)
        h = graph6.decode(cert.decode())
        assert sorted(h.degrees()) == sorted(g.degrees())

    def test_deterministic_bytes(self):
        assert canonical_certificate(complete_graph(4)) == b"C~"

    def test_bound(self):
        with pytest.raises(ValueError):
            canonical_certificate(empty_graph(17))


class TestGraph6:
    def test_decode_k4(self):
        g = graph6.decode("C~")
        assert g == complete_graph(4)
        assert g.degrees() == [3, 3, 3, 3]

    @pytest.mark.parametrize("text", ["", "C", "C~~", "C\x7f", "B@", ">>graph6<<"])
    def test_malformed(self, text):
        with pytest.raises(graph6.Graph6Error):
            graph6.decode(text)

    def test_header_prefix(self):
        assert graph6.decode(">>graph6<<C~") == complete_graph(4)

    @given(graphs(min_n=0, max_n=12))
    def test_round_trip(self, g):
        assert graph6.decode(graph6.encode(g)) == g

    @pytest.mark.parametrize("n", [62, 63, 64])
    def test_long_headers(self, n):
        g = path_graph(n)
        text = graph6.encode(g)
        assert text.startswith("~") == (n > 62)
        assert graph6.decode(text) == g
        assert graph6.encode(graph6.decode(text)) == text

    def test_known_encoding(self):
        # P_3 on 0-1-2: bits x01=1, x02=0, x12=1 -> 101000 -> 40+63
        assert graph6.encode(path_graph(3)) == "Bg"
