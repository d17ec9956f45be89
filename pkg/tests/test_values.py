from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toughgraph import CutsetWitness, Graph, Toughness


class TestToughnessOrdering:
    def test_kind_ordering(self):
        assert Toughness.zero() < Toughness.finite(Fraction(1, 99))
        assert Toughness.finite(Fraction(99)) < Toughness.infinite()
        assert Toughness.zero() < Toughness.infinite()

    def test_finite_ordering_exhaustive_small(self):
        vals = [
            Toughness.finite(Fraction(a, b))
            for a in range(1, 13)
            for b in range(1, 13)
        ]
        for x in vals:
            for y in vals:
                assert (x < y) == (x.value < y.value)
                assert (x == y) == (x.value == y.value)

    @given(
        st.fractions(min_value=Fraction(1, 1000), max_value=1000),
        st.fractions(min_value=Fraction(1, 1000), max_value=1000),
    )
    def test_finite_ordering_matches_fraction(self, p, q):
        assert (Toughness.finite(p) < Toughness.finite(q)) == (p < q)

    def test_equality_and_hash(self):
        assert Toughness.finite(Fraction(2, 4)) == Toughness.finite(Fraction(1, 2))
        assert hash(Toughness.finite(1)) == hash(Toughness.finite(Fraction(2, 2)))
        assert Toughness.zero() != Toughness.infinite()
        assert Toughness.zero() != 0  # no cross-type equality

    def test_finite_must_be_positive(self):
        with pytest.raises(ValueError):
            Toughness.finite(0)
        with pytest.raises(ValueError):
            Toughness.finite(-1)

    def test_str(self):
        assert str(Toughness.zero()) == "0"
        assert str(Toughness.infinite()) == "inf"
        assert str(Toughness.finite(Fraction(4, 3))) == "4/3"
        assert str(Toughness.finite(1)) == "1/1"

    def test_sorting(self):
        xs = [
            Toughness.infinite(),
            Toughness.finite(Fraction(1, 2)),
            Toughness.zero(),
            Toughness.finite(2),
        ]
        assert sorted(xs) == [xs[2], xs[1], xs[3], xs[0]]


class TestCutsetWitness:
    def test_from_mask(self):
        w = CutsetWitness.from_mask(0b1010, 3)
        assert w.removed == (1, 3)
        assert w.size == 2
        assert w.ratio == Fraction(2, 3)

    def test_empty_set_has_no_ratio(self):
        w = CutsetWitness.from_mask(0, 2)
        assert w.removed == ()
        assert w.ratio is None

    def test_recheck(self):
        g = Graph.path(5)
        assert CutsetWitness.from_mask(0b00100, 2).recheck(g)
        assert not CutsetWitness.from_mask(0b00100, 3).recheck(g)
