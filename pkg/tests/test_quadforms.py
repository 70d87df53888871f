import random
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from verlinde_bricks import quadforms as qf
from verlinde_bricks.heisenberg import PreconditionError, all_eprime_elements
from verlinde_bricks.quadforms import QuadraticForm
from verlinde_bricks.symplectic import DimensionError, Mod2Class, all_mod2, transvection, weil2


def m2(*c):
    return Mod2Class(len(c) // 2, c)


def forms_and_pairs(max_genus=4):
    def build(g):
        cls = st.integers(0, (1 << (2 * g)) - 1).map(lambda b: Mod2Class.from_bits(g, b))
        form = st.integers(0, (1 << (2 * g)) - 1).map(lambda b: QuadraticForm.from_bits(g, b))
        return st.tuples(form, cls, cls)

    return st.integers(1, max_genus).flatmap(build)


def brute_arf(q):
    """Majority value: Arf(q) = 0 iff q takes +1 on more than half of J^(2)."""
    total = sum(qf.evaluate(q, a) for a in all_mod2(q.genus))
    return 0 if total > 0 else 1


class TestEvaluate:
    def test_examples(self):
        q = QuadraticForm(1, (0, 0))
        assert qf.evaluate(q, m2(0, 0)) == 1
        assert qf.evaluate(q, m2(1, 1)) == -1
        assert q(m2(1, 0)) == 1

    def test_order_independent(self):
        rng = random.Random(3)
        for g in (1, 2):
            for q in qf.all_forms(g):
                for alpha in all_mod2(g):
                    values = {qf.evaluate(q, alpha, order) for order in permutations(range(2 * g))}
                    assert len(values) == 1
        for _ in range(200):
            q = QuadraticForm.from_bits(3, rng.randrange(64))
            alpha = Mod2Class.from_bits(3, rng.randrange(64))
            order = list(range(6))
            rng.shuffle(order)
            assert qf.evaluate(q, alpha, order) == qf.evaluate(q, alpha)

    @pytest.mark.parametrize("g", [1, 2])
    def test_polarization_exhaustive(self, g):
        classes = list(all_mod2(g))
        for q in qf.all_forms(g):
            for a, b in product(classes, repeat=2):
                assert q(a + b) == q(a) * q(b) * weil2(a, b)

    def test_packed_matches(self):
        for g in (1, 2, 3):
            for q in qf.all_forms(g):
                for a in all_mod2(g):
                    assert (-1) ** qf.evaluate_bits(q.bits, a.bits, g) == qf.evaluate(q, a)

    def test_validation(self):
        with pytest.raises(DimensionError):
            QuadraticForm(2, (0, 1))
        with pytest.raises(ValueError):
            QuadraticForm(1, (0, 2))
        with pytest.raises(DimensionError):
            qf.evaluate(QuadraticForm(1, (0, 0)), m2(0, 0, 0, 0))


@given(forms_and_pairs())
def test_polarization_randomized(data):
    q, a, b = data
    assert q(a + b) == q(a) * q(b) * weil2(a, b)


class TestArf:
    def test_examples(self):
        assert qf.arf(QuadraticForm(2, (0, 0, 0, 0))) == 0
        assert qf.arf(QuadraticForm(1, (1, 1))) == 1

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_matches_majority(self, g):
        for q in qf.all_forms(g):
            assert qf.arf(q) == brute_arf(q)

    def test_transvection_orbits(self):
        rng = random.Random(11)
        for g in (2, 3):
            for _ in range(100):
                q = QuadraticForm.from_bits(g, rng.randrange(1 << (2 * g)))
                v = Mod2Class.from_bits(g, rng.randrange(1 << (2 * g)))
                assert qf.arf(qf.pullback(q, transvection(v))) == qf.arf(q)

    @pytest.mark.parametrize("g", [1, 2])
    def test_translation_rule(self, g):
        for q in qf.all_forms(g):
            for gamma in all_mod2(g):
                t = qf.translate(q, gamma)
                for a in all_mod2(g):
                    assert t(a) == q(a) * weil2(gamma, a)
                flip = 0 if q(gamma) == 1 else 1
                assert qf.arf(t) == qf.arf(q) ^ flip
            images = {qf.translate(q, gamma) for gamma in all_mod2(g)}
            assert len(images) == 1 << (2 * g)


class TestCounts:
    def test_examples(self):
        assert qf.count_by_arf(1) == (3, 1)
        assert qf.count_by_arf(2) == (10, 6)
        assert qf.count_value_constrained(1, m2(1, 0)) == (1, 1)
        for alpha in list(all_mod2(2))[1:]:
            assert qf.count_value_constrained(2, alpha) == (4, 4)

    @pytest.mark.parametrize("g", range(1, 6))
    def test_closed_forms(self, g):
        assert qf.count_by_arf(g) == qf.arf_closed_form(g)
        assert sum(qf.count_by_arf(g)) == 1 << (2 * g)

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_census(self, g):
        by_arf, constrained = qf.arf_census(g)
        assert by_arf == qf.count_by_arf(g)
        n = 1 << (2 * g - 2)
        assert set(constrained.values()) == {(n, n)}
        for a in (1, (1 << (2 * g)) - 1):
            assert constrained[a] == qf.count_value_constrained(g, Mod2Class.from_bits(g, a))

    def test_zero_alpha_rejected(self):
        with pytest.raises(PreconditionError):
            qf.count_value_constrained(2, Mod2Class.zero(2))
        with pytest.raises(ValueError):
            qf.count_by_arf(0)


class TestEPrimeCharacters:
    @pytest.mark.parametrize("g", [1, 2])
    def test_multiplicative(self, g):
        els = list(all_eprime_elements(g))
        for q in qf.all_forms(g):
            for x, y in product(els, repeat=2):
                assert qf.eprime_character(q, x * y) == qf.eprime_character(q, x) * qf.eprime_character(q, y)
            central = [x for x in els if all(c == 0 for c in x.cls.coords)]
            assert {x.sign: qf.eprime_character(q, x) for x in central} == {1: 1, -1: -1}
