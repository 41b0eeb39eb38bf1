import itertools
import random

import pytest

from qgrass.errors import BadConfiguration, IndexOutOfRange, SizeMismatch
from qgrass.qmatrix import QuantumMatrixAlgebra
from qgrass.subsets import c_exponent, classify_noncrossing


@pytest.fixture(scope="module")
def alg24():
    return QuantumMatrixAlgebra(2, 4)


class TestStraightening:
    def test_same_row(self, alg24):
        e = alg24.element({((1, 1), (1, 2)): {0: 1}})
        assert e.terms == {(alg24.gen(1, 2), alg24.gen(1, 1)): {1: 1}}

    def test_descending_word_fixed(self, alg24):
        w = (alg24.gen(2, 3), alg24.gen(1, 4))
        assert alg24.normal_form({w: {0: 1}}).terms == {w: {0: 1}}

    def test_fourth_relation(self, alg24):
        e = alg24.element({((1, 1), (2, 2)): {0: 1}})
        assert e.terms == {
            (alg24.gen(2, 2), alg24.gen(1, 1)): {0: 1},
            (alg24.gen(2, 1), alg24.gen(1, 2)): {1: 1, -1: -1},
        }

    def test_index_out_of_range(self, alg24):
        with pytest.raises(IndexOutOfRange):
            alg24.generator(3, 1)

    def _random_words(self, alg, rng, count, maxlen):
        gens = range(alg.m * alg.n)
        return [
            tuple(rng.choice(gens) for _ in range(rng.randint(1, maxlen)))
            for _ in range(count)
        ]

    def test_confluence_of_strategies(self):
        alg = QuantumMatrixAlgebra(3, 4)
        rng = random.Random(11)
        for w in self._random_words(alg, rng, 120, 6):
            left = alg.normal_form({w: {0: 1}}, strategy="leftmost")
            right = alg.normal_form({w: {0: 1}}, strategy="rightmost")
            assert left == right

    def test_homogeneity(self):
        alg = QuantumMatrixAlgebra(3, 4)
        rng = random.Random(23)
        for w in self._random_words(alg, rng, 60, 5):
            rows = tuple(sorted(g // alg.n for g in w))
            cols = tuple(sorted(g % alg.n for g in w))
            nf = alg.normal_form({w: {0: 1}})
            assert nf.content_degrees() == {(rows, cols)}

    def test_q1_specialisation_is_sorted_word(self):
        alg = QuantumMatrixAlgebra(2, 5)
        rng = random.Random(3)
        for w in self._random_words(alg, rng, 60, 5):
            nf = alg.normal_form({w: {0: 1}})
            shadow = nf.specialize_q1()
            assert shadow == {tuple(sorted(w, reverse=True)): 1}


class TestMinors:
    def test_one_by_one(self):
        alg = QuantumMatrixAlgebra(1, 4)
        assert alg.quantum_minor((3,)).terms == {(alg.gen(1, 3),): {0: 1}}

    def test_two_by_two(self, alg24):
        got = alg24.quantum_minor((1, 2))
        want = alg24.element(
            {((1, 1), (2, 2)): {0: 1}, ((1, 2), (2, 1)): {1: -1}}
        )
        assert got == want

    def test_q1_is_classical_determinant(self, alg24):
        shadow = alg24.quantum_minor((1, 3)).specialize_q1()
        assert shadow == {
            (alg24.gen(2, 3), alg24.gen(1, 1)): 1,
            (alg24.gen(2, 1), alg24.gen(1, 3)): -1,
        }

    def test_size_mismatch(self, alg24):
        with pytest.raises(SizeMismatch):
            alg24.quantum_minor((1, 2, 3))


class TestQuasiCommutation:
    def test_examples(self, alg24):
        d12 = alg24.quantum_minor((1, 2))
        d13 = alg24.quantum_minor((1, 3))
        d24 = alg24.quantum_minor((2, 4))
        assert alg24.quasi_comm_exponent(d12, d13) == 1
        assert alg24.quasi_comm_exponent(d13, d24) is None
        assert alg24.quasi_comm_exponent(d13, d13) == 0

    def test_generators_1xn(self):
        alg = QuantumMatrixAlgebra(1, 5)
        for I, J in itertools.product(itertools.combinations(range(1, 6), 1), repeat=2):
            c = alg.quasi_comm_exponent(alg.quantum_minor(I), alg.quantum_minor(J))
            assert c in (-1, 0, 1)
            assert c == c_exponent(I, J)


class TestShortPlucker:
    def test_gr24(self, alg24):
        assert alg24.verify_short_plucker((), 1, 2, 3, 4)

    def test_wrapped_configuration(self, alg24):
        # d < a < b < c after the canonical rotation
        assert alg24.verify_short_plucker((), 2, 3, 4, 1)

    def test_gr36_with_core(self):
        alg = QuantumMatrixAlgebra(3, 6)
        assert alg.verify_short_plucker((2,), 1, 3, 4, 6)

    def test_bad_configurations(self, alg24):
        with pytest.raises(BadConfiguration):
            alg24.verify_short_plucker((), 1, 3, 2, 4)  # not cyclic
        with pytest.raises(BadConfiguration):
            alg24.verify_short_plucker((1,), 1, 2, 3, 4)  # J not disjoint
        with pytest.raises(BadConfiguration):
            QuantumMatrixAlgebra(3, 6).verify_short_plucker((), 1, 2, 3, 4)  # |J| wrong


class TestVerifyLZ:
    def test_gr24_and_gr25(self):
        rep = QuantumMatrixAlgebra(2, 4).verify_lz()
        assert rep["pairs"] == 15 and rep["violations"] == []
        rep = QuantumMatrixAlgebra(2, 5).verify_lz()
        assert rep["pairs"] == 45 and rep["violations"] == []

    def test_exponent_matches_c(self):
        alg = QuantumMatrixAlgebra(2, 5)
        for I, J in itertools.product(itertools.combinations(range(1, 6), 2), repeat=2):
            got = alg.quasi_comm_exponent(alg.quantum_minor(I), alg.quantum_minor(J))
            if classify_noncrossing(I, J).crossing:
                assert got is None
            else:
                assert got == c_exponent(I, J)
