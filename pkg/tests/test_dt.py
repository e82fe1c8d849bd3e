from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dtzero import (
    ChernNumbers,
    NonIntegralSpecError,
    SetPartition,
    ThreefoldSpec,
    catalog,
    decompose,
    delta_transform,
    discrepancy_degrees,
    dt_rational_power,
    dt_series,
    macmahon_neg,
    partition_product_sum,
    reconstructed_coefficient,
    twist_exponent,
    verify_multiplicativity,
    verify_root_argument,
    verify_universality,
)

P3 = ThreefoldSpec.builtin("P3")
QUINTIC = ThreefoldSpec.builtin("quintic")


class TestDtSeries:
    def test_p3_head(self):
        d = dt_series(P3, 2)
        assert d.exponent == -20
        assert d.coefficients() == (1, 20, 150)

    def test_trivial_twist_gives_constant_series(self):
        spec = ThreefoldSpec.explicit(ChernNumbers(0, 0, 0))
        d = dt_series(spec, 5)
        assert d.exponent == 0
        assert d.coefficients() == (1, 0, 0, 0, 0, 0)

    def test_quintic_head(self):
        d = dt_series(QUINTIC, 1)
        assert d.exponent == -200
        assert d.coefficients() == (1, 200)

    def test_catalog_exponents(self):
        assert [dt_series(s, 0).exponent for s in catalog()] == [-20, -18, -16, -200]

    def test_integrality_through_order_twelve(self):
        for spec in catalog():
            d = dt_series(spec, 12)
            assert d.series.is_integral()
            assert d.series[0] == 1

    def test_calabi_yau_exponent_is_euler_characteristic(self):
        cy = ThreefoldSpec.explicit(ChernNumbers(0, 0, -200))
        d = dt_series(cy, 3)
        assert d.exponent == -200
        assert d.series == macmahon_neg(3) ** -200

    def test_non_integral_spec_rejected(self):
        half = ThreefoldSpec.scaled(Fraction(1, 3), P3)
        with pytest.raises(NonIntegralSpecError, match="not an honest threefold"):
            dt_series(half, 4)


class TestRationalPower:
    def test_half_of_p3_squares_back(self):
        half = ThreefoldSpec.scaled(Fraction(1, 2), P3)
        series, exponent = dt_rational_power(half, 8)
        assert exponent == -10
        assert series == macmahon_neg(8) ** -10
        assert series ** 2 == dt_series(P3, 8).series

    def test_genuinely_fractional_exponent(self):
        third = ThreefoldSpec.scaled(Fraction(1, 3), P3)
        series, exponent = dt_rational_power(third, 6)
        assert exponent == Fraction(-20, 3)
        assert series ** 3 == dt_series(P3, 6).series


class TestMultiplicativity:
    def test_same_factor_twice(self):
        report = verify_multiplicativity(P3, P3, order=10)
        assert report.ok
        assert report.union.series == dt_series(P3, 10).series ** 2

    def test_mixed_factors(self):
        report = verify_multiplicativity(P3, ThreefoldSpec.builtin("P1xP1xP1"), order=10)
        assert report.ok
        assert report.union.exponent == -36

    def test_empty_union_is_identity(self):
        empty = ThreefoldSpec.disjoint_union([])
        union = ThreefoldSpec.disjoint_union([P3])
        assert dt_series(union, 8).series == dt_series(P3, 8).series
        assert dt_series(empty, 8).coefficients() == (1,) + (0,) * 8

    def test_k_copies_is_kth_power(self):
        for k in (2, 3, 4):
            union = ThreefoldSpec.disjoint_union([P3] * k)
            assert dt_series(union, 8).series == dt_series(P3, 8).series ** k


class TestRootArgument:
    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_catalog_roots(self, m):
        for spec in catalog():
            report = verify_root_argument(spec, m, order=8)
            assert report.ok
            assert report.root_is_integral

    def test_index_one(self):
        report = verify_root_argument(P3, 1, order=6)
        assert report.ok
        assert report.root == report.expected.series

    def test_quintic_through_cobordism(self):
        # build the series from the generator powers of the decomposition
        # (m = 1), then compare against the direct computation
        dec = decompose(QUINTIC.resolve())
        assert dec.m == 1
        m1, m2, m3 = dec.integer_multiples()
        order = 8
        gens = [ThreefoldSpec.builtin(n) for n in ("P3", "P2xP1", "P1xP1xP1")]
        combined = (
            dt_series(gens[0], order).series ** m1
            * dt_series(gens[1], order).series ** m2
            * dt_series(gens[2], order).series ** m3
        )
        assert combined == dt_series(QUINTIC, order).series


class TestDiscrepancyDegrees:
    def test_p3_first_degrees(self):
        t = discrepancy_degrees(P3, 4)
        assert t[1] == 20
        assert t[2] == -100
        assert t[3] == 400
        assert t[4] == -2520

    def test_reconstruction_order_two(self):
        t = discrepancy_degrees(P3, 2)
        f2 = dt_series(P3, 2).series[2]
        assert factorial(2) * f2 == t[1] ** 2 + t[2]

    def test_partition_sum_matches_series(self):
        for spec in catalog():
            t = discrepancy_degrees(spec, 6)
            series = dt_series(spec, 6).series
            for n in range(1, 7):
                assert reconstructed_coefficient(t, n) == series[n]

    def test_partition_sum_explicit_n3(self):
        t = {1: 5, 2: -3, 3: 7}
        # partitions of [3]: bottom, three pairings, top
        assert partition_product_sum(t, 3) == 5 ** 3 + 3 * (-3 * 5) + 7

    def test_degrees_via_delta_transform(self):
        # independent extraction: with F(beta) = prod over blocks of
        # (|b|! f_{|b|}), the top discrepancy on each lattice equals t_k
        for spec in (P3, QUINTIC):
            n_max = 5
            series = dt_series(spec, n_max).series
            t = discrepancy_degrees(spec, n_max)
            g = {k: factorial(k) * series[k] for k in range(1, n_max + 1)}

            def block_value(p):
                out = Fraction(1)
                for b in p.blocks:
                    out *= g[len(b)]
                return out

            for k in range(1, n_max + 1):
                top = SetPartition.whole(k)
                got = delta_transform(top, block_value)[top]
                assert got == t[k]

    def test_zero_exponent_gives_zero_degrees(self):
        spec = ThreefoldSpec.explicit(ChernNumbers(0, 0, 0))
        assert set(discrepancy_degrees(spec, 5).values()) == {0}


class TestUniversality:
    def test_catalog_proportionality(self):
        report = verify_universality(catalog(), 6)
        assert report.ok
        assert report.lambdas == {1: -1, 2: 5, 3: -20, 4: 126, 5: -624, 6: 6000}

    def test_degrees_scale_with_exponent(self):
        report = verify_universality(catalog(), 4)
        for label, k_x in report.exponents.items():
            for k, t_k in report.degrees[label].items():
                assert t_k == report.lambdas[k] * k_x

    def test_single_spec(self):
        report = verify_universality([QUINTIC], 5)
        assert report.ok
        assert report.exponents == {"quintic": -200}

    @given(st.integers(min_value=-30, max_value=30))
    @settings(max_examples=25, deadline=None)
    def test_synthetic_calabi_yau_family(self, chi):
        spec = ThreefoldSpec.explicit(ChernNumbers(0, 0, chi))
        report = verify_universality([spec], 4)
        assert report.ok
