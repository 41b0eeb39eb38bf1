import itertools

import pytest

from qgrass.errors import SizeMismatch, TruncationTooSmall
from qgrass.rankone import (
    kappa,
    kappa_truncated_oracle,
    lambda_pair,
    min_exponent_vector,
)
from qgrass.subsets import c_exponent, classify_noncrossing


def all_subsets(m, n):
    return list(itertools.combinations(range(1, n + 1), m))


class TestExponentVectors:
    def test_examples(self):
        assert min_exponent_vector((1, 2), (3, 4), 4) == (0, 1, 2, 1)
        assert min_exponent_vector((2, 4), (2, 4), 4) == (0, 0, 0, 0)
        assert min_exponent_vector((3, 4), (1, 2), 4) == (2, 1, 0, 1)

    def test_minimality_and_steps(self):
        for n in (4, 5, 6):
            for m in range(1, n):
                for I, J in itertools.product(all_subsets(m, n), repeat=2):
                    vec = min_exponent_vector(I, J, n)
                    assert min(vec) == 0
                    closed = vec + (vec[0],)
                    assert all(abs(closed[i + 1] - closed[i]) <= 1 for i in range(n))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            min_exponent_vector((1,), (1, 2), 4)


class TestKappa:
    def test_examples(self):
        assert kappa((1, 2), (3, 4), 4) == 0
        assert kappa((3, 4), (1, 2), 4) == 2
        assert kappa((1, 3), (1, 3), 4) == 0
        assert kappa((2, 4), (1, 3), 4) == 1

    def test_prefix_maximum_formula(self):
        # kappa equals max over prefixes of (#J-only <= p) - (#I-only <= p)
        for n in (4, 5, 6):
            for I, J in itertools.product(all_subsets(2, n), repeat=2):
                only_j = set(J) - set(I)
                only_i = set(I) - set(J)
                best = max(
                    sum(1 for a in only_j if a <= p) - sum(1 for a in only_i if a <= p)
                    for p in range(n + 1)
                )
                assert kappa(I, J, n) == best

    def test_split_sizes_in_case_i(self):
        # for non-crossing pairs in case (i): kappa(I,J) = |J'|, kappa(J,I) = |J''|
        for n in (4, 5, 6, 7):
            for I, J in itertools.product(all_subsets(2, n), repeat=2):
                cls = classify_noncrossing(I, J)
                if cls.case_i is None:
                    continue
                jp, jpp = cls.case_i
                assert kappa(I, J, n) == len(jp)
                assert kappa(J, I, n) == len(jpp)


class TestLambda:
    def test_examples(self):
        assert lambda_pair((1, 2), (3, 4), 4) == 2
        assert lambda_pair((1, 4), (1, 4), 5) == 0
        assert lambda_pair((1, 3), (2, 4), 4) == 1

    def test_matches_c_on_noncrossing(self):
        for n in range(2, 9):
            for m in range(1, n):
                for I, J in itertools.product(all_subsets(m, n), repeat=2):
                    if not classify_noncrossing(I, J).crossing:
                        assert lambda_pair(I, J, n) == c_exponent(I, J)

    def test_antisymmetry(self):
        for I, J in itertools.product(all_subsets(3, 6), repeat=2):
            assert lambda_pair(I, J, 6) == -lambda_pair(J, I, 6)


class TestTruncatedOracle:
    def test_examples(self):
        assert kappa_truncated_oracle((1, 2), (3, 4), 4, 8) == 0
        assert kappa_truncated_oracle((1, 3), (1, 3), 4, 8) == 0
        assert kappa_truncated_oracle((3, 4), (1, 2), 4, 8) == 2

    def test_truncation_too_small(self):
        with pytest.raises(TruncationTooSmall):
            kappa_truncated_oracle((1, 2), (3, 4), 4, 4)

    def test_agreement_small(self):
        for n in (3, 4, 5):
            for m in range(1, n):
                for I, J in itertools.product(all_subsets(m, n), repeat=2):
                    assert kappa(I, J, n) == kappa_truncated_oracle(I, J, n)

    def test_stable_under_deeper_truncation(self):
        for I, J in itertools.product(all_subsets(2, 5), repeat=2):
            at_2n = kappa_truncated_oracle(I, J, 5, 10)
            at_3n = kappa_truncated_oracle(I, J, 5, 15)
            assert at_2n == at_3n == kappa(I, J, 5)
