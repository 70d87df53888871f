from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from verlinde_bricks.symplectic import (
    MINUS,
    PLUS,
    DimensionError,
    Mod2Class,
    Mod4Class,
    SignConvention,
    all_mod2,
    all_mod4,
    canonical_lift,
    dot2_bits,
    dot4_bits,
    intersect2,
    intersect4,
    lifts_of,
    mu4_square,
    swap_pairs,
    transvection,
    weil2,
    weil4,
)

from .conftest import ref_intersect


def m4(*c):
    return Mod4Class(len(c) // 2, c)


def m2(*c):
    return Mod2Class(len(c) // 2, c)


def mod4_pairs(max_genus=4):
    def build(g):
        v = st.tuples(*[st.integers(0, 3)] * (2 * g)).map(lambda c: Mod4Class(g, c))
        return st.tuples(v, v)

    return st.integers(1, max_genus).flatmap(build)


class TestTypes:
    def test_coordinates_are_reduced(self):
        assert Mod4Class(1, (5, -1)).coords == (1, 3)

    def test_bad_lengths(self):
        with pytest.raises(DimensionError):
            Mod2Class(2, (0, 1, 0))
        with pytest.raises(ValueError):
            Mod2Class(1, (0, 2))
        with pytest.raises(ValueError):
            Mod4Class(0, ())

    def test_sign_convention(self):
        assert PLUS.flipped() == MINUS
        with pytest.raises(ValueError):
            SignConvention(0)

    def test_bits_roundtrip(self):
        for g in (1, 2, 3):
            for bits in range(1 << (2 * g)):
                assert Mod2Class.from_bits(g, bits).bits == bits

    def test_split_and_halve(self):
        a = m4(3, 2, 1, 0)
        abar, x = a.split()
        assert abar.coords == (1, 0, 1, 0) and x.coords == (1, 1, 0, 0)
        assert m4(2, 0, 0, 2).halve().coords == (1, 0, 0, 1)
        with pytest.raises(ValueError):
            m4(1, 0).halve()

    def test_genus_mismatch(self):
        with pytest.raises(DimensionError):
            intersect4(m4(1, 0), m4(1, 0, 0, 0))
        with pytest.raises(DimensionError):
            m2(1, 0) + m2(1, 0, 0, 0)


class TestExamples:
    def test_intersect4(self):
        assert intersect4(m4(1, 0), m4(0, 1)) == 1
        assert intersect4(m4(1, 0), m4(1, 0)) == 0
        assert intersect4(m4(1, 0, 2, 0), m4(0, 1, 0, 3)) == 3

    def test_weil4(self):
        assert weil4(m4(1, 0), m4(0, 1), PLUS) == 1  # i
        assert weil4(m4(1, 0), m4(0, 1), MINUS) == 3  # -i
        assert weil4(m4(2, 3), m4(0, 0), MINUS) == 0

    def test_weil2(self):
        assert weil2(m2(1, 0), m2(0, 1)) == -1
        assert weil2(m2(1, 1), m2(1, 1)) == 1
        assert weil2(m2(1, 1, 0, 0), m2(0, 1, 1, 0)) == -1

    def test_lifts(self):
        assert {a.coords for a in lifts_of(m2(0, 0))} == {(0, 0), (2, 0), (0, 2), (2, 2)}
        lifts = lifts_of(m2(1, 0))
        assert len(lifts) == 4 and all(a.reduce() == m2(1, 0) for a in lifts)
        assert lifts[0] == canonical_lift(m2(1, 0))
        for alpha in all_mod2(2):
            lifts = lifts_of(alpha)
            assert len(lifts) == 16 == len(set(lifts))

    def test_mu4_square(self):
        assert [mu4_square(e) for e in range(4)] == [1, -1, 1, -1]


class TestPacked:
    def test_helpers_match_coordinates(self):
        for g in (1, 2):
            for x, y in product(range(1 << (2 * g)), repeat=2):
                a, b = Mod2Class.from_bits(g, x), Mod2Class.from_bits(g, y)
                assert dot2_bits(x, y, g) == ref_intersect(a.coords, b.coords) % 2
                assert dot4_bits(x, y, g) == ref_intersect(a.coords, b.coords) % 4
                assert swap_pairs(swap_pairs(x, g), g) == x


class TestExhaustive:
    @pytest.mark.parametrize("g", [1, 2])
    def test_bilinear_alternating_compatible(self, g, sign):
        classes = list(all_mod4(g))
        for a, b in product(classes, repeat=2):
            w = weil4(a, b, sign)
            assert (w + weil4(b, a, sign)) % 4 == 0
            assert mu4_square(w) == weil2(a.reduce(), b.reduce())
            assert w == (sign.epsilon * ref_intersect(a.coords, b.coords)) % 4
        for a in classes:
            assert weil4(a, a, sign) == 0

    def test_bilinear_in_first_slot_g1(self, sign):
        classes = list(all_mod4(1))
        for a, b, c in product(classes, repeat=3):
            assert weil4(a + b, c, sign) == (weil4(a, c, sign) + weil4(b, c, sign)) % 4

    @pytest.mark.parametrize("g", [1, 2])
    def test_nondegenerate(self, g):
        classes = list(all_mod4(g))
        for a in classes[1:]:
            assert any(weil4(a, b) for b in classes)

    def test_reduction_is_homomorphism(self):
        for a, b in product(all_mod4(1), repeat=2):
            assert (a + b).reduce() == a.reduce() + b.reduce()

    def test_transvection_preserves_form(self):
        for v in all_mod2(2):
            t = transvection(v)
            for x, y in product(list(all_mod2(2)), repeat=2):
                assert intersect2(t(x), t(y)) == intersect2(x, y)


@given(mod4_pairs())
def test_epsilon_conjugates_weil4(pair):
    a, b = pair
    assert (weil4(a, b, PLUS) + weil4(a, b, MINUS)) % 4 == 0
    assert weil2(a.reduce(), b.reduce()) == weil2(b.reduce(), a.reduce())


@given(mod4_pairs())
def test_antisymmetry_randomized(pair):
    a, b = pair
    assert (weil4(a, b) + weil4(b, a)) % 4 == 0
    assert weil4(a, a) == 0
