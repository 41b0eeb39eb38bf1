from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgrass.errors import PoleAtOne
from qgrass.upoly import UFrac, pgcd, pmul, pstrip


def test_pstrip_and_pgcd():
    assert pstrip((1, 0, 0)) == (1,)
    assert pstrip((0,)) == ()
    # gcd(u^2-1, u-1) = u-1 up to sign normalisation
    assert pgcd((-1, 0, 1), (-1, 1)) == (-1, 1)
    assert pgcd((2, 2), (4,)) == (1,)  # primitive gcd ignores integer content
    assert pmul((1, 1), (-1, 1)) == (-1, 0, 1)


class TestCanonicalForm:
    def test_reduction(self):
        f = UFrac(0, (-1, 0, 1), (-1, 1))  # (u^2-1)/(u-1)
        assert f == UFrac(0, (1, 1), (1,))
        assert f.is_integer_laurent()

    def test_u_power_extraction(self):
        f = UFrac(0, (0, 0, 3), (0, 1))  # 3u^2 / u
        assert f.upow == 1 and f.num == (3,) and f.den == (1,)

    def test_denominator_sign(self):
        f = UFrac(0, (1,), (0, -2))  # 1 / (-2u)
        assert f.den[-1] > 0

    def test_zero(self):
        z = UFrac(5, (), (1, 2))
        assert not z
        assert z == UFrac.zero()
        assert hash(z) == hash(UFrac(0, (0,), (7,)))


class TestArithmetic:
    def test_examples(self):
        u3 = UFrac.upower(3)
        assert u3.eval_at_one() == 1
        assert UFrac(0, (-1, 0, 1), (-1, 1)).eval_at_one() == 2
        assert UFrac.from_int(5).eval_at_one() == Fraction(5)

    def test_pole(self):
        with pytest.raises(PoleAtOne):
            UFrac(0, (1,), (-1, 1)).eval_at_one()

    def test_field_identities(self):
        a = UFrac(2, (1, 1), (1,))
        b = UFrac(-1, (3,), (1, 0, 2))
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert a * (UFrac.from_int(1) / a) == UFrac.from_int(1)

    @given(
        st.integers(-4, 4),
        st.lists(st.integers(-3, 3), min_size=1, max_size=4),
        st.lists(st.integers(-3, 3), min_size=1, max_size=4),
    )
    def test_add_mul_distribute(self, k, cs1, cs2):
        a = UFrac(k, tuple(cs1) or (1,), (1,))
        b = UFrac(0, tuple(cs2) or (1,), (2, 1))
        c = UFrac(-1, (1, 2), (1,))
        assert (a + b) * c == a * c + b * c

    def test_laurent_terms(self):
        f = UFrac.upower(-2) + UFrac.upower(1, 3)
        assert f.laurent_terms() == {-2: 1, 1: 3}
        with pytest.raises(ArithmeticError):
            UFrac(0, (1,), (1, 1)).laurent_terms()

    def test_canonical_str(self):
        assert UFrac.upower(-2).canonical_str() == "u^-2·(1)/(1)"
        assert UFrac(0, (1, 0, -2), (3, 1)).canonical_str() == "u^0·(1-2u^2)/(3+u)"
