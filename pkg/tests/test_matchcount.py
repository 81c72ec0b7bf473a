import json
import random
import threading

import pytest
from hypothesis import given, settings, strategies as st

from matchenergy.graph import (apex_family, build_graph, complete_graph, cycle_graph, delete_edge, disjoint_union,
                               empty_graph, path_graph, split_family, star_graph)
from matchenergy.matchcount import (MatchCounter, MatchVector, QuasiOrder, edge_recurrence_check, hosoya_index,
                                    match_vector, match_vector_bruteforce, poly_coeffs, quasi_compare,
                                    vertex_recurrence_check)

from .test_graph import graphs


def mv(*counts, order=None):
    order = order if order is not None else 2 * (len(counts) - 1)
    return MatchVector(order, tuple(counts))


class TestMatchVector:
    def test_triangle_plus_pendant(self):
        assert match_vector(apex_family(4, 1)).counts == match_vector_bruteforce(apex_family(4, 1)).counts == (1, 4, 1)

    def test_k4(self):
        assert match_vector(complete_graph(4)).counts == (1, 6, 3)

    def test_empty(self):
        assert match_vector(empty_graph(5)).counts == (1, 0, 0)

    def test_k24_perfect_matchings(self):
        # (2r-1)!! perfect matchings in K_{2r}; exceeds nothing but exercises bigints cheaply
        counts = match_vector(complete_graph(24)).counts
        assert counts[12] == 23 * 21 * 19 * 17 * 15 * 13 * 11 * 9 * 7 * 5 * 3
        assert counts[1] == 276

    def test_bound(self):
        with pytest.raises(ValueError):
            match_vector(empty_graph(25))

    def test_invariants(self, random_graphs):
        for g in random_graphs[:100]:
            v = match_vector(g)
            assert v.counts[0] == 1
            assert len(v) == g.n // 2 + 1
            if g.n >= 2:
                assert v[1] == g.size

    def test_vector_validation(self):
        with pytest.raises(ValueError):
            MatchVector(4, (1, 2))
        with pytest.raises(ValueError):
            MatchVector(4, (2, 1, 0))

    def test_json_round_trip(self):
        v = match_vector(complete_graph(24))
        text = v.to_json()
        assert all(isinstance(x, str) for x in json.loads(text))
        assert MatchVector.from_json(text, 24) == v

    def test_shared_cache_is_consistent_across_threads(self):
        cache = MatchCounter()
        gs = [split_family(n, k, m) for n in range(6, 13) for m in range(2, n // 2 + 1) for k in range(1, m + 1)]
        expected = [match_vector(g) for g in gs]
        results = {}

        def work(i):
            results[i] = [match_vector(g, cache) for g in gs]

        threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == expected for r in results.values())


class TestBruteforce:
    def test_k2(self):
        assert match_vector_bruteforce(complete_graph(2)).counts == (1, 1)

    def test_c6(self):
        # 6 edges, 9 disjoint edge pairs, 2 perfect matchings
        assert match_vector_bruteforce(cycle_graph(6)).counts == (1, 6, 9, 2)

    def test_bound(self):
        with pytest.raises(ValueError):
            match_vector_bruteforce(empty_graph(13))

    def test_agreement(self, connected_upto7, random_graphs):
        for g in connected_upto7 + random_graphs:
            assert match_vector(g) == match_vector_bruteforce(g)


class TestRecurrences:
    def test_vertex_recurrence_k4(self):
        assert all(vertex_recurrence_check(complete_graph(4), u) for u in range(4))

    def test_vertex_recurrence_star_centre(self):
        assert vertex_recurrence_check(star_graph(4), 0)

    def test_vertex_recurrence_isolated(self):
        g = disjoint_union(cycle_graph(5), empty_graph(1))
        assert vertex_recurrence_check(g, 5)

    def test_recurrences_random(self, random_graphs):
        cache = MatchCounter()
        for g in random_graphs[:150]:
            assert all(edge_recurrence_check(g, u, v, cache) for u, v in g.edges())
            assert all(vertex_recurrence_check(g, u, cache) for u in range(g.n))

    def test_component_multiplicativity(self, random_graphs):
        rng = random.Random(5)
        small = [g for g in random_graphs if g.n <= 6]
        for _ in range(60):
            a, b = rng.choice(small), rng.choice(small)
            ga, gb = match_vector_bruteforce(a), match_vector_bruteforce(b)
            prod = [0] * (len(ga) + len(gb) - 1)
            for i, x in enumerate(ga.counts):
                for j, y in enumerate(gb.counts):
                    prod[i + j] += x * y
            union = match_vector_bruteforce(disjoint_union(a, b))
            assert [union[t] for t in range(len(prod))] == prod
            assert not any(union.counts[len(prod):])


class TestHosoya:
    def test_values(self):
        assert hosoya_index(mv(1, 4, 1)) == 6
        assert hosoya_index(MatchVector(5, (1, 0, 0))) == 1
        assert hosoya_index(match_vector_bruteforce(complete_graph(4))) == 10


class TestQuasiOrder:
    def test_equal(self):
        v = match_vector(cycle_graph(6))
        assert quasi_compare(v, v) is QuasiOrder.EQUAL

    def test_incomparable(self):
        assert quasi_compare(mv(1, 3, 0), mv(1, 2, 1)) is QuasiOrder.INCOMPARABLE

    def test_above(self):
        assert quasi_compare(mv(1, 3, 2), mv(1, 3, 1)) is QuasiOrder.STRICTLY_ABOVE

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            quasi_compare(MatchVector(4, (1, 2, 1)), MatchVector(5, (1, 2, 1)))

    def test_edge_deletion_strictly_below(self, random_graphs):
        cache = MatchCounter()
        for g in random_graphs[:200]:
            whole = match_vector(g, cache)
            for u, v in g.edges():
                assert quasi_compare(match_vector(delete_edge(g, u, v), cache), whole) is QuasiOrder.STRICTLY_BELOW

    @settings(max_examples=80)
    @given(graphs(min_n=2, max_n=9), st.data())
    def test_proper_spanning_subgraph_strictly_below(self, g, data):
        if not g.size:
            return
        keep = data.draw(st.lists(st.sampled_from(g.edges()), unique=True, max_size=g.size - 1))
        sub = build_graph(g.n, keep)
        assert quasi_compare(match_vector(sub), match_vector(g)) is QuasiOrder.STRICTLY_BELOW


class TestPolyCoeffs:
    def test_k2(self):
        p = poly_coeffs(match_vector(complete_graph(2)))
        assert p.coeffs == (1, 0, -1)
        assert str(p) == "λ^2 - 1"

    def test_p3(self):
        p = poly_coeffs(match_vector_bruteforce(path_graph(3)))
        assert p.coeffs == (1, 0, -2, 0)
        assert str(p) == "λ^3 - 2λ"

    def test_k4(self):
        p = poly_coeffs(match_vector_bruteforce(complete_graph(4)))
        assert p.coeffs == (1, 0, -6, 0, 3)
        assert str(p) == "λ^4 - 6λ^2 + 3"

    @given(graphs())
    def test_odd_offsets_vanish(self, g):
        v = match_vector(g)
        p = poly_coeffs(v)
        assert len(p.coeffs) == g.n + 1
        assert all(c == 0 for c in p.coeffs[1::2])
        assert all(p.coeffs[2 * t] == (-1) ** t * v[t] for t in range(len(v)))
