from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toughgraph import (
    DomainError,
    Graph,
    SizeCapError,
    Toughness,
    alpha_bruteforce,
    components_after_removal,
    enumerate_connected_graphs,
    independence_number,
    is_t_tough,
    tough_set_with_ratio,
    toughness,
    toughness_via_decision,
)
from toughgraph import _kernels, solver

from conftest import petersen


# -- independent local oracles (deliberately naive) ------------------------


def oracle_toughness(g):
    """(value, witness_vertices) scanning subsets by size, then by mask value."""
    if not g.is_connected():
        return Toughness.zero(), ()
    best = None
    best_set = None
    for mask in sorted(range(1 << g.n), key=lambda m: (m.bit_count(), m)):
        if mask.bit_count() == g.n:
            continue
        s = tuple(v for v in range(g.n) if mask >> v & 1)
        w = components_after_removal(g, s)
        if w >= 2:
            ratio = Fraction(len(s), w)
            if best is None or ratio < best:
                best, best_set = ratio, s
    if best is None:
        return Toughness.infinite(), None
    return Toughness.finite(best), best_set


def small_graphs(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_connected_graphs(n)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, picks)


# -- toughness values ------------------------------------------------------


class TestToughnessValues:
    def test_path(self):
        assert toughness(Graph.path(4)).value == Toughness.finite(Fraction(1, 2))

    def test_cycles(self):
        for n in range(4, 9):
            assert toughness(Graph.cycle(n)).value == Toughness.finite(1)

    def test_stars(self):
        for b in range(2, 6):
            assert toughness(Graph.star(b)).value == Toughness.finite(Fraction(1, b))

    def test_petersen(self):
        assert toughness(petersen()).value == Toughness.finite(Fraction(4, 3))

    def test_complete_is_infinite(self):
        for n in (1, 2, 5):
            res = toughness(Graph.complete(n))
            assert res.value.is_infinite and res.witness is None

    def test_disconnected_is_zero(self):
        res = toughness(Graph(4, [(0, 1)]))
        assert res.value.is_zero and res.witness is None

    def test_matches_oracle_up_to_n5(self):
        for g in small_graphs(5):
            val, _ = oracle_toughness(g)
            assert toughness(g).value == val

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7))
    def test_matches_oracle_random(self, g):
        if not g.is_connected():
            assert toughness(g).value.is_zero
        else:
            assert toughness(g).value == oracle_toughness(g)[0]


class TestWitness:
    def test_deterministic_tie_break(self):
        # smallest |S| first, then smallest mask == earliest combination
        for g in small_graphs(5):
            res = toughness(g)
            if res.value.is_finite:
                assert res.witness.removed == oracle_toughness(g)[1]

    def test_witness_rechecks(self):
        for g in small_graphs(5):
            res = toughness(g)
            if res.witness is not None:
                w = res.witness
                assert w.recheck(g)
                assert w.ratio == res.value.value
                assert w.component_count >= 2

    def test_path4_witness(self):
        assert toughness(Graph.path(4)).witness.removed == (1,)


class TestDecisionProcedure:
    def test_threshold_boundary(self):
        g = Graph.cycle(5)  # tau = 1
        assert is_t_tough(g, 1)[0]
        assert is_t_tough(g, Fraction(1, 2))[0]
        ok, w = is_t_tough(g, Fraction(101, 100))
        assert not ok
        assert w.recheck(g) and w.size < w.component_count * Fraction(101, 100)

    def test_disconnected_fails_with_empty_witness(self):
        ok, w = is_t_tough(Graph(3, [(0, 1)]), Fraction(1, 10))
        assert not ok and w.removed == () and w.component_count == 2

    def test_complete_succeeds_for_all_t(self):
        assert is_t_tough(Graph.complete(4), 100)[0]

    def test_t_must_be_positive(self):
        with pytest.raises(DomainError):
            is_t_tough(Graph.path(3), 0)
        with pytest.raises(DomainError):
            is_t_tough(Graph.path(3), Fraction(-1, 2))

    def test_agrees_with_toughness(self):
        for g in small_graphs(5):
            tau = toughness(g).value
            for t in (Fraction(1, 3), Fraction(1, 2), 1, Fraction(3, 2), 2):
                expected = not tau.is_zero and (tau.is_infinite or tau.value >= t)
                assert is_t_tough(g, t)[0] == expected


class TestToughnessViaDecision:
    def test_requires_connected_noncomplete(self):
        with pytest.raises(DomainError):
            toughness_via_decision(Graph(3, [(0, 1)]))
        with pytest.raises(DomainError):
            toughness_via_decision(Graph.complete(3))

    def test_agrees_including_witness_up_to_n5(self):
        for g in small_graphs(5):
            if g.is_complete():
                continue
            direct = toughness(g)
            decided = toughness_via_decision(g)
            assert decided.value == direct.value
            assert decided.witness.removed == direct.witness.removed

    def test_ratio_bounds(self):
        # numerator and denominator both within 1..n-1 on every small graph
        for g in small_graphs(6):
            if g.is_complete():
                continue
            q = toughness_via_decision(g).value.value
            assert 1 <= q.numerator <= g.n - 1
            assert 1 <= q.denominator <= g.n - 1


class TestToughSetWithRatio:
    def test_finds_exact_ratio(self):
        g = Graph.path(4)
        w = tough_set_with_ratio(g, Fraction(1, 2))
        assert w.removed == (1,) and w.component_count == 2

    def test_none_when_unattained(self):
        assert tough_set_with_ratio(Graph.path(4), Fraction(1, 3)) is None
        assert tough_set_with_ratio(Graph.complete(4), 1) is None


class TestSizeCaps:
    def test_empty_graph_rejected(self):
        with pytest.raises(DomainError):
            toughness(Graph(0))

    def test_cap_at_64(self):
        with pytest.raises(SizeCapError):
            toughness(Graph(65))

    def test_python_fallback_above_62(self):
        # stars terminate fast even in the pure-Python twins
        assert toughness(Graph.star(62)).value == Toughness.finite(Fraction(1, 62))
        assert toughness(Graph.star(63)).value == Toughness.finite(Fraction(1, 63))
        big_disc = Graph(64, [(0, 1)])
        assert toughness(big_disc).value.is_zero
        assert not is_t_tough(big_disc, 1)[0]


# -- kernel vs pure-Python twin cross-checks -------------------------------


class TestKernelTwins:
    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=1, max_n=7))
    def test_best_cut(self, g):
        arr = np.array(g.adj, dtype=np.int64)
        assert tuple(_kernels.best_cut(arr, g.n)) == solver._py_best_cut(g.adj, g.n)

    @settings(max_examples=150, deadline=None)
    @given(
        graphs(min_n=1, max_n=7),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=1, max_value=3),
    )
    def test_find_violation(self, g, a, b):
        arr = np.array(g.adj, dtype=np.int64)
        assert int(_kernels.find_violation(arr, g.n, a, b)) == solver._py_find_violation(
            g.adj, g.n, a, b
        )

    @settings(max_examples=150, deadline=None)
    @given(
        graphs(min_n=1, max_n=7),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=1, max_value=4),
    )
    def test_find_exact_ratio(self, g, a, b):
        from math import gcd

        if gcd(a, b) != 1:
            return
        arr = np.array(g.adj, dtype=np.int64)
        assert int(
            _kernels.find_exact_ratio(arr, g.n, a, b)
        ) == solver._py_find_exact_ratio(g.adj, g.n, a, b)

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=2, max_n=7))
    def test_find_edge_witness(self, g):
        edges = g.edges()
        if not edges:
            return
        from toughgraph.graph import delete_edge

        ge = delete_edge(g, edges[0])
        arr_g = np.array(g.adj, dtype=np.int64)
        arr_ge = np.array(ge.adj, dtype=np.int64)
        assert int(
            _kernels.find_edge_witness(arr_ge, arr_g, g.n, 1, 1)
        ) == solver._py_find_edge_witness(ge.adj, g.adj, g.n, 1, 1)

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=1, max_n=7), st.integers(min_value=0, max_value=127))
    def test_component_count(self, g, mask):
        mask &= (1 << g.n) - 1
        remain = ((1 << g.n) - 1) & ~mask
        arr = np.array(g.adj, dtype=np.int64)
        want = components_after_removal(g, [v for v in range(g.n) if mask >> v & 1])
        assert solver._py_ncomp(g.adj, remain) == want
        assert _kernels._ncomp(arr, remain, g.n) == want


# -- independence number ---------------------------------------------------


class TestIndependence:
    def test_known_values(self):
        assert independence_number(Graph.cycle(5)).alpha == 2
        assert independence_number(Graph.cycle(7)).alpha == 3
        assert independence_number(Graph.complete(6)).alpha == 1
        assert independence_number(Graph.empty(4)).alpha == 4
        assert independence_number(petersen()).alpha == 4

    def test_witness_is_independent_and_max(self):
        for g in small_graphs(5):
            res = independence_number(g)
            assert len(res.witness_set) == res.alpha
            for u in res.witness_set:
                for v in res.witness_set:
                    assert u == v or not g.has_edge(u, v)

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_n=1, max_n=9))
    def test_matches_bruteforce(self, g):
        assert independence_number(g).alpha == alpha_bruteforce(g)

    def test_bruteforce_cap(self):
        with pytest.raises(SizeCapError):
            alpha_bruteforce(Graph(31))
