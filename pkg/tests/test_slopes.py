"""Slope engine: continued fractions, Farey paths, exceptional slopes."""

import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cablekit.slopes import (
    MERIDIAN,
    NegContinuedFraction,
    Slope,
    SlopeDomainError,
    bfs_interval_path_length,
    eval_cont_frac,
    exceptional_slopes,
    farey_neighbors,
    farey_shortest_path,
    mediant_farey_graph,
    neg_cont_frac,
)


def slopes_in_window(max_den):
    for p in range(2, max_den + 1):
        for q in range(-p + 1, 0):
            if gcd(-q, p) == 1:
                yield Slope(q, p)


class TestSlope:
    def test_normalization(self):
        assert Slope(2, 4) == Slope(1, 2)
        assert Slope(-2, -4) == Slope(1, 2)
        assert Slope(3, -6) == Slope(-1, 2)
        assert Slope(-5, 0) == MERIDIAN
        assert str(Slope(1, 0)) == "inf"
        assert str(Slope(-3, 7)) == "-3/7"
        assert str(Slope(4, 1)) == "4"

    def test_parse_round_trip(self):
        for text in ["-3/7", "5", "inf", "0", "-1"]:
            assert str(Slope.parse(text)) == text

    def test_order(self):
        assert Slope(-1, 2) < Slope(-1, 3) < Slope(0) < Slope(3, 2)
        with pytest.raises(SlopeDomainError):
            MERIDIAN < Slope(0)

    def test_zero_over_zero_rejected(self):
        with pytest.raises(SlopeDomainError):
            Slope(0, 0)


class TestContinuedFractions:
    def test_examples(self):
        assert neg_cont_frac(Slope(-1, 2)).terms == (-2,)
        assert neg_cont_frac(Slope(-3, 7)).terms == (-3, -2, -2)
        assert neg_cont_frac(Slope(-2, 3)).terms == (-2, -2)

    def test_eval_examples(self):
        assert eval_cont_frac(NegContinuedFraction([-2])) == Slope(-1, 2)
        assert eval_cont_frac(NegContinuedFraction([-2, -2, -2])) == Slope(-3, 4)
        # collapse convention: [-3, -2, -1] = [-3, -1] = [-2]
        assert eval_cont_frac(NegContinuedFraction([-3, -2, -1])) == Slope(-1, 2)

    def test_eval_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            eval_cont_frac(NegContinuedFraction([-2, -1, -2]))

    def test_domain(self):
        for bad in [Slope(0), Slope(-1), Slope(1, 3), Slope(-3, 2), MERIDIAN]:
            with pytest.raises(SlopeDomainError):
                neg_cont_frac(bad)

    def test_round_trip_and_canonical_to_200(self):
        for s in slopes_in_window(200):
            cf = neg_cont_frac(s)
            assert cf.is_canonical()
            assert eval_cont_frac(cf) == s

    def test_collapse(self):
        assert NegContinuedFraction([-3, -2, -1]).canonical().terms == (-2,)
        assert NegContinuedFraction([-1]).canonical().terms == (-1,)


class TestFarey:
    def test_neighbors_examples(self):
        assert farey_neighbors(Slope(-1), Slope(-1, 2))
        assert not farey_neighbors(Slope(-1), Slope(-1, 3))
        assert farey_neighbors(Slope(-2, 5), Slope(-1, 3))
        assert farey_neighbors(MERIDIAN, Slope(7))

    def test_path_examples(self):
        assert farey_shortest_path(Slope(-1), Slope(-1, 3)) == [
            Slope(-1), Slope(-1, 2), Slope(-1, 3)
        ]
        assert farey_shortest_path(Slope(-1), Slope(-3, 7)) == [
            Slope(-1), Slope(-1, 2), Slope(-3, 7)
        ]
        a = Slope(5, 7)
        assert farey_shortest_path(a, a) == [a]

    def test_path_rejects_meridian(self):
        with pytest.raises(SlopeDomainError):
            farey_shortest_path(MERIDIAN, Slope(0))

    @settings(max_examples=300, deadline=None)
    @given(
        st.integers(-40, 40), st.integers(1, 40),
        st.integers(-40, 40), st.integers(1, 40),
    )
    def test_path_validity_and_reversal(self, qa, pa, qb, pb):
        a, b = Slope(qa, pa), Slope(qb, pb)
        path = farey_shortest_path(a, b)
        assert path[0] == a and path[-1] == b
        for u, v in zip(path, path[1:]):
            assert farey_neighbors(u, v)
        lo, hi = min(a, b), max(a, b)
        assert all(lo <= v <= hi for v in path)
        assert farey_shortest_path(b, a) == path[::-1]

    def test_interval_vs_unconstrained_geodesics_differ(self):
        # the interval path from -1 to -7/10 has three edges even though the
        # unconstrained Farey graph contains the shorter detour through -2/3
        path = farey_shortest_path(Slope(-1), Slope(-7, 10))
        assert path == [Slope(-1), Slope(-3, 4), Slope(-5, 7), Slope(-7, 10)]
        assert farey_neighbors(Slope(-1), Slope(-2, 3))
        assert farey_neighbors(Slope(-2, 3), Slope(-7, 10))

    def test_bfs_oracle_small(self):
        graph = mediant_farey_graph(8)
        verts = sorted(graph, key=lambda s: (s.numerator, s.denominator))
        for a, b in itertools.combinations(verts, 2):
            want = bfs_interval_path_length(graph, a, b)
            got = len(farey_shortest_path(a, b)) - 1
            assert got == want, (a, b, got, want)


class TestExceptional:
    def test_examples(self):
        assert exceptional_slopes(Slope(0)) == [Slope(-1)]
        assert exceptional_slopes(Slope(-1, 3)) == [Slope(-1, 2), Slope(-1)]
        assert exceptional_slopes(Slope(-2, 3)) == [Slope(-1)]

    def test_domain(self):
        for bad in [Slope(1, 3), Slope(-5, 4), MERIDIAN, Slope(2)]:
            with pytest.raises(SlopeDomainError):
                exceptional_slopes(bad)

    def test_agreement_with_farey_path_to_50(self):
        for s in slopes_in_window(50):
            path = farey_shortest_path(Slope(-1), s)
            assert exceptional_slopes(s) == path[:-1][::-1]

    def test_always_ends_at_minus_one(self):
        for s in slopes_in_window(60):
            exc = exceptional_slopes(s)
            assert exc[-1] == Slope(-1)
            assert all(Slope(-1) <= e < s for e in exc)


class TestCanonicalEvaluationWindow:
    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.integers(-9, -2), min_size=1, max_size=12))
    def test_canonical_terms_evaluate_inside_window(self, terms):
        value = eval_cont_frac(NegContinuedFraction(terms))
        assert Slope(-1) < value < Slope(0)
        assert neg_cont_frac(value).terms == tuple(terms)


class TestMediantGraphIntegrity:
    def test_edges_satisfy_the_tessellation_criterion(self):
        graph = mediant_farey_graph(9)
        for a, nbrs in graph.items():
            for b in nbrs:
                assert farey_neighbors(a, b)
                assert a in graph[b]
