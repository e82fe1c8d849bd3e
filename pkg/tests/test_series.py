from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dtzero import OrderMismatchError, TruncatedSeries

from conftest import series, series_pair, series_triple


def S(*coeffs, order=None):
    return TruncatedSeries.from_coefficients(coeffs, order=order)


class TestConstruction:
    def test_orders(self):
        assert S(1, 2, 3).order == 2
        assert TruncatedSeries.one(5).order == 5
        assert TruncatedSeries.zero(0).coefficients == (Fraction(0),)

    def test_padding(self):
        assert S(1, 1, order=4) == S(1, 1, 0, 0, 0)

    def test_too_many_coefficients(self):
        with pytest.raises(ValueError):
            S(1, 2, 3, order=1)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            TruncatedSeries([1.5, 0])

    def test_monomial(self):
        assert TruncatedSeries.monomial(3, 2, 4) == S(0, 0, 3, 0, 0)
        with pytest.raises(ValueError):
            TruncatedSeries.monomial(1, 5, 4)

    def test_equality_requires_same_order(self):
        assert S(1, 0) != S(1, 0, 0)


class TestAdd:
    def test_cancellation(self):
        assert S(1, 1) + S(1, -1) == S(2, 0)

    def test_zero_identity(self):
        s = S(3, -2, Fraction(1, 2))
        assert TruncatedSeries.zero(2) + s == s

    def test_direct_sum(self):
        assert S(1, 0, 3) + S(0, 2, 1) == S(1, 2, 4)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            S(1, 0) + S(1, 0, 0)


class TestMul:
    def test_difference_of_squares(self):
        assert S(1, 1, order=2) * S(1, -1, order=2) == S(1, 0, -1)

    def test_one_identity(self):
        s = S(2, -5, Fraction(7, 3), 1)
        assert s * TruncatedSeries.one(3) == s

    def test_truncated_square(self):
        assert S(1, 1, 1) * S(1, 1, 1) == S(1, 2, 3)

    def test_scalar(self):
        assert 3 * S(1, -1) == S(3, -3)
        assert S(1, -1) * Fraction(1, 2) == S(Fraction(1, 2), Fraction(-1, 2))

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            S(1, 1) * S(1, 1, 1)


class TestInverse:
    def test_geometric(self):
        assert S(1, -1, order=5).inverse() == S(1, 1, 1, 1, 1, 1)

    def test_one(self):
        assert TruncatedSeries.one(4).inverse() == TruncatedSeries.one(4)

    def test_alternating(self):
        assert S(1, 1, order=4).inverse() == S(1, -1, 1, -1, 1)

    def test_non_unit(self):
        with pytest.raises(ValueError, match="not a unit"):
            S(0, 1).inverse()


class TestIntPow:
    def test_zeroth_power(self):
        assert S(1, 1, order=3) ** 0 == TruncatedSeries.one(3)

    def test_negative_geometric(self):
        assert S(1, -1, order=4) ** -1 == S(1, 1, 1, 1, 1)

    def test_binomial_cube(self):
        assert S(1, 1, order=3) ** 3 == S(1, 3, 3, 1)

    def test_negative_power_of_non_unit(self):
        with pytest.raises(ValueError, match="not a unit"):
            S(0, 1) ** -2

    def test_non_integer_exponent(self):
        with pytest.raises(TypeError):
            S(1, 1) ** Fraction(1, 2)


class TestLogExp:
    def test_log_of_one(self):
        assert TruncatedSeries.one(4).log1() == TruncatedSeries.zero(4)

    def test_mercator(self):
        got = S(1, -1, order=4).log1()
        assert got == TruncatedSeries(
            [0, -1, Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 4)]
        )

    def test_exp_of_zero(self):
        assert TruncatedSeries.zero(4).exp0() == TruncatedSeries.one(4)

    def test_exp_of_q(self):
        got = TruncatedSeries.monomial(1, 1, 4).exp0()
        assert got == TruncatedSeries(
            [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
        )

    def test_log_requires_constant_one(self):
        with pytest.raises(ValueError):
            S(2, 1).log1()

    def test_exp_requires_constant_zero(self):
        with pytest.raises(ValueError):
            S(1, 1).exp0()


class TestRoot:
    def test_square_root_of_square(self):
        sq = S(1, 1, order=4) ** 2
        assert sq.root_m(2) == S(1, 1, order=4)

    def test_index_one_is_identity(self):
        s = S(1, 4, -7, Fraction(2, 3))
        assert s.root_m(1) == s

    def test_requires_constant_one(self):
        with pytest.raises(ValueError):
            S(2, 1).root_m(2)

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            S(1, 1).root_m(0)


class TestIntegrality:
    def test_integral(self):
        assert S(1, -3, 5).is_integral()
        assert S(1, -3, 5).integer_coefficients() == (1, -3, 5)

    def test_not_integral(self):
        s = S(1, Fraction(1, 2))
        assert not s.is_integral()
        with pytest.raises(ValueError):
            s.integer_coefficients()

    def test_negate_q_is_involution(self):
        s = S(1, 2, 3, 4)
        assert s.negate_q() == S(1, -2, 3, -4)
        assert s.negate_q().negate_q() == s


class TestRingAxioms:
    @given(series_triple())
    @settings(max_examples=60, deadline=None)
    def test_add_mul_axioms(self, triple):
        a, b, c = triple
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(series(constant=1))
    @settings(max_examples=40, deadline=None)
    def test_inverse_is_inverse(self, a):
        assert a * a.inverse() == TruncatedSeries.one(a.order)

    @given(series(constant=1, max_order=8),
           st.integers(min_value=-4, max_value=4),
           st.integers(min_value=-4, max_value=4))
    @settings(max_examples=40, deadline=None)
    def test_pow_additivity(self, a, e1, e2):
        assert a ** (e1 + e2) == (a ** e1) * (a ** e2)

    @given(series(constant=1, max_order=8), st.integers(min_value=1, max_value=4))
    @settings(max_examples=40, deadline=None)
    def test_root_of_power(self, a, m):
        assert (a ** m).root_m(m) == a

    @given(series(constant=1, max_order=12))
    @settings(max_examples=40, deadline=None)
    def test_exp_log_roundtrip(self, a):
        assert a.log1().exp0() == a

    @given(series(constant=0, max_order=12))
    @settings(max_examples=40, deadline=None)
    def test_log_exp_roundtrip(self, a):
        assert a.exp0().log1() == a
