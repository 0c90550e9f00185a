import random

import pytest

from twistlab.surd import QuadraticSurd
from twistlab.torus import (
    TorusError,
    TorusParameter,
    UnimodularWitness,
    apply_mobius,
    isomorphic,
    morita_equivalent,
    morita_invariant,
    sl2_witness,
)

from oracles import GENERATORS, brute_force_equivalent

S = QuadraticSurd.normalize
SQRT2 = TorusParameter(QuadraticSurd.sqrt_of(2))
SQRT3 = TorusParameter(QuadraticSurd.sqrt_of(3))
GOLDEN = TorusParameter(S(1, 1, 2, 5))


def random_word(rng, max_len=12) -> UnimodularWitness:
    m = UnimodularWitness.identity()
    for _ in range(rng.randint(0, max_len)):
        m = m @ rng.choice(GENERATORS)
    return m


class TestWitnessMatrix:
    def test_rejects_non_unimodular(self):
        with pytest.raises(TorusError):
            UnimodularWitness(2, 0, 0, 1)
        with pytest.raises(TorusError):
            UnimodularWitness(0, 0, 0, 0)

    def test_inverse_and_product(self):
        rng = random.Random(7)
        for _ in range(50):
            m = random_word(rng)
            assert (m @ m.inverse()).rows() == ((1, 0), (0, 1))


class TestApplyMobius:
    def test_translation(self):
        assert apply_mobius(UnimodularWitness(1, 1, 0, 1), SQRT2).theta == S(1, 1, 1, 2)

    def test_identity(self):
        assert apply_mobius(UnimodularWitness.identity(), GOLDEN).theta == GOLDEN.theta

    def test_det_minus_one(self):
        # (sqrt2 + 1)/sqrt2 = (2 + sqrt2)/2
        got = apply_mobius(UnimodularWitness(1, 1, 1, 0), SQRT2)
        assert got.theta == S(2, 1, 2, 2)


class TestIsomorphic:
    def test_equal(self):
        assert isomorphic(SQRT2, TorusParameter(QuadraticSurd.sqrt_of(2)))

    def test_translate_not_isomorphic(self):
        assert not isomorphic(SQRT2, TorusParameter(S(1, 1, 1, 2)))

    def test_same_real_after_normalization(self):
        assert isomorphic(TorusParameter(S(2, 2, 2, 2)), TorusParameter(S(1, 1, 1, 2)))

    def test_rational_parameter_rejected(self):
        with pytest.raises(TorusError):
            TorusParameter(S(1, 0, 2, 1))


class TestMoritaEquivalent:
    def test_translation_pair(self):
        w = morita_equivalent(SQRT2, TorusParameter(S(1, 1, 1, 2)))
        assert w is not None and abs(w.det) == 1
        assert apply_mobius(w, SQRT2).theta == S(1, 1, 1, 2)

    def test_offset_pair_det_reported(self):
        t2 = TorusParameter(S(2, 1, 2, 2))
        w = morita_equivalent(SQRT2, t2)
        assert w is not None
        assert apply_mobius(w, SQRT2).theta == t2.theta
        assert w.det in (1, -1)

    def test_distinct_tail_classes(self):
        assert morita_equivalent(SQRT2, GOLDEN) is None

    def test_reflexive_symmetric_transitive(self):
        rng = random.Random(11)
        params = [apply_mobius(random_word(rng, 6), SQRT3) for _ in range(4)]
        for t in params:
            assert morita_equivalent(t, t) is not None
        for a in params:
            for b in params:
                wab = morita_equivalent(a, b)
                wba = morita_equivalent(b, a)
                assert wab is not None and wba is not None
        a, b, c = params[:3]
        wab = morita_equivalent(a, b)
        wbc = morita_equivalent(b, c)
        composed = wbc @ wab
        assert apply_mobius(composed, a).theta == c.theta

    def test_isomorphic_implies_morita(self):
        w = morita_equivalent(SQRT2, TorusParameter(QuadraticSurd.sqrt_of(2)))
        assert w is not None


class TestSL2Witness:
    def test_translation(self):
        w = sl2_witness(SQRT2, TorusParameter(S(1, 1, 1, 2)))
        assert w is not None and w.det == 1
        assert apply_mobius(w, SQRT2).theta == S(1, 1, 1, 2)

    def test_odd_period_parity_flip(self):
        t2 = TorusParameter(S(2, 1, 2, 2))
        w = sl2_witness(SQRT2, t2)
        assert w is not None and w.det == 1
        assert apply_mobius(w, SQRT2).theta == t2.theta

    def test_self_pair(self):
        w = sl2_witness(GOLDEN, GOLDEN)
        assert w is not None and w.det == 1
        assert apply_mobius(w, GOLDEN).theta == GOLDEN.theta


class TestMoritaInvariant:
    def test_sqrt2(self):
        assert morita_invariant(SQRT2) == (2,)

    def test_translate_same_class(self):
        assert morita_invariant(TorusParameter(S(1, 1, 1, 2))) == (2,)

    def test_golden(self):
        assert morita_invariant(GOLDEN) == (1,)

    @pytest.mark.parametrize("base", [SQRT2, SQRT3, GOLDEN])
    def test_invariant_under_random_words(self, base):
        rng = random.Random(hash(base.theta) & 0xFFFF)
        expected = morita_invariant(base)
        for _ in range(30):
            t = apply_mobius(random_word(rng), base)
            assert morita_invariant(t) == expected


class TestAgainstBruteForce:
    @pytest.mark.parametrize(
        "x,y",
        [
            ((0, 1, 1, 2), (1, 1, 1, 2)),
            ((0, 1, 1, 2), (2, 1, 2, 2)),
            ((0, 1, 1, 3), (1, 1, 2, 3)),
            ((1, 1, 2, 5), (3, 1, 2, 5)),
        ],
    )
    def test_positive_pairs(self, x, y):
        t1, t2 = TorusParameter(S(*x)), TorusParameter(S(*y))
        fast = morita_equivalent(t1, t2)
        brute = brute_force_equivalent(t1, t2, length=8)
        assert fast is not None and brute is not None

    def test_negative_pair(self):
        assert morita_equivalent(SQRT2, GOLDEN) is None
        assert brute_force_equivalent(SQRT2, GOLDEN, length=8) is None
