"""Tests for the standard, calculated percentile and Barendregt estimators."""

import math

import numpy as np
import pytest

from odds_ratio_mc.errors import DegenerateTable
from odds_ratio_mc.estimators import (
    barendregt_estimate,
    or_star,
    percentile_calc_estimate,
    standard_estimate,
)
from odds_ratio_mc.models import Method
from odds_ratio_mc.table import crude_or, new_table, sigma_hat_squared

Z_975 = 1.959963984540054
PROTECTIVE = new_table(77.5, 22.5, 92.5, 7.5)
BALANCED = new_table(25, 25, 25, 25)
CLOSED_FORM = (standard_estimate, percentile_calc_estimate, barendregt_estimate)


def random_tables(count: int, seed: int = 11):
    rng = np.random.default_rng(seed)
    for cells in rng.uniform(0.5, 200.0, size=(count, 4)):
        yield new_table(*cells)


class TestStandardEstimate:
    """Method I: crude OR with exp(ln OR ± z·sigma_hat)."""

    def test_protective_expected_table(self):
        """Expected-count table gives point .279 and CI (.116, .673)."""
        e = standard_estimate(PROTECTIVE, 0.05)
        assert e.method is Method.STANDARD
        assert e.point == pytest.approx(0.27928, rel=1e-4)
        assert e.lower == pytest.approx(0.11586, rel=2e-4)
        assert e.upper == pytest.approx(0.67318, rel=2e-4)
        assert e.mu_used == pytest.approx(math.log(crude_or(PROTECTIVE)))
        assert e.sigma_used == pytest.approx(0.44888, abs=1e-5)

    def test_balanced_table_is_symmetric(self):
        """Balanced table gives bounds exp(±z·0.4) around 1."""
        e = standard_estimate(BALANCED, 0.05)
        assert e.point == 1.0
        assert e.lower == pytest.approx(math.exp(-Z_975 * 0.4), rel=1e-12)
        assert e.upper == pytest.approx(math.exp(Z_975 * 0.4), rel=1e-12)
        assert e.lower == pytest.approx(1 / e.upper, rel=1e-12)

    def test_interval_collapses_as_alpha_approaches_one(self):
        """As alpha approaches 1 the interval shrinks onto the point."""
        e = standard_estimate(PROTECTIVE, 0.9999)
        assert e.upper / e.lower < 1.001
        assert e.lower < e.point < e.upper

    def test_zero_cell_propagates(self):
        """A zero cell raises DegenerateTable."""
        with pytest.raises(DegenerateTable):
            standard_estimate(new_table(0, 4, 5, 6), 0.05)

    def test_reciprocity_under_exposure_swap(self):
        """Swapping exposure rows inverts point and bounds."""
        for t in random_tables(100):
            e = standard_estimate(t, 0.05)
            s = standard_estimate(t.swap_exposure(), 0.05)
            assert s.point == pytest.approx(1 / e.point, rel=1e-12)
            assert s.lower == pytest.approx(1 / e.upper, rel=1e-12)
            assert s.upper == pytest.approx(1 / e.lower, rel=1e-12)


class TestOrStar:
    """Bias-corrected point estimate."""

    def test_protective_expected_table(self):
        """Expected-count table gives OR* = .2525."""
        assert or_star(PROTECTIVE) == pytest.approx(0.25251, rel=1e-4)

    def test_balanced_table(self):
        """Balanced table gives exp(-0.08)."""
        assert or_star(BALANCED) == pytest.approx(math.exp(-0.08), rel=1e-12)
        assert or_star(BALANCED) == pytest.approx(0.92312, rel=1e-5)

    def test_large_cells_approach_crude(self):
        """Large cells make the correction negligible."""
        big = new_table(77.5e6, 22.5e6, 92.5e6, 7.5e6)
        assert or_star(big) == pytest.approx(crude_or(big), rel=1e-6)

    def test_strictly_below_crude(self):
        """OR* is strictly below the crude odds ratio."""
        for t in random_tables(500):
            assert or_star(t) < crude_or(t)


class TestPercentileCalcEstimate:
    """Method III: interval around OR* with the same sigma_hat."""

    def test_protective_expected_table(self):
        """Expected-count table gives point .2525 and CI (.105, .609)."""
        e = percentile_calc_estimate(PROTECTIVE, 0.05)
        assert e.method is Method.PCTL_CALC
        assert e.point == pytest.approx(0.25251, rel=1e-4)
        assert e.lower == pytest.approx(0.10475, rel=5e-4)
        assert e.upper == pytest.approx(0.60866, rel=5e-4)
        assert e.mu_used == pytest.approx(
            math.log(crude_or(PROTECTIVE)) - sigma_hat_squared(PROTECTIVE) / 2
        )

    def test_balanced_is_standard_times_or_star(self):
        """Every value is the standard value times OR*."""
        std = standard_estimate(BALANCED, 0.05)
        calc = percentile_calc_estimate(BALANCED, 0.05)
        assert calc.point == pytest.approx(0.92312, rel=1e-5)
        assert calc.lower == pytest.approx(std.lower * calc.point, rel=1e-12)
        assert calc.upper == pytest.approx(std.upper * calc.point, rel=1e-12)

    def test_multiplicative_shift_identity(self):
        """Bounds equal standard bounds times exp(-sigma_hat^2/2)."""
        for t in random_tables(1000, seed=2024):
            shift = math.exp(-sigma_hat_squared(t) / 2)
            std = standard_estimate(t, 0.05)
            calc = percentile_calc_estimate(t, 0.05)
            assert abs(calc.lower / (std.lower * shift) - 1) <= 1e-12
            assert abs(calc.upper / (std.upper * shift) - 1) <= 1e-12

    def test_same_bound_ratio_as_standard(self):
        """Bound ratio upper/lower equals the standard one."""
        for t in random_tables(100):
            std = standard_estimate(t, 0.05)
            calc = percentile_calc_estimate(t, 0.05)
            assert calc.upper / calc.lower == pytest.approx(std.upper / std.lower, rel=1e-12)


class TestBarendregtEstimate:
    """Method IV: recalculated sigma* and mu**."""

    def test_protective_expected_table(self):
        """Recalculated sigma*^2 and point match the closed form."""
        e = barendregt_estimate(PROTECTIVE, 0.05)
        assert e.method is Method.BARENDREGT
        assert e.sigma_used**2 == pytest.approx(0.186176, abs=1e-4)
        assert e.point == pytest.approx(0.25448, abs=2e-4)
        assert e.mu_used == pytest.approx(-1.368628, abs=2e-4)
        assert e.lower < e.point < e.upper

    def test_balanced_inequalities(self):
        """Balanced table: point below 1 and sigma* below sigma_hat."""
        e = barendregt_estimate(BALANCED, 0.05)
        assert e.point < 1.0
        assert e.sigma_used < 0.4

    def test_point_below_crude(self):
        """Point estimate is below the crude odds ratio."""
        for t in random_tables(300):
            assert barendregt_estimate(t, 0.05).point < crude_or(t)


class TestIntervalProperties:
    """Properties shared by the closed-form methods."""

    @pytest.mark.parametrize("estimator", [standard_estimate, percentile_calc_estimate])
    def test_geometric_midpoint(self, estimator):
        """Point is the geometric midpoint of the bounds."""
        for t in random_tables(200):
            e = estimator(t, 0.05)
            assert math.sqrt(e.lower * e.upper) == pytest.approx(e.point, rel=1e-12)

    @pytest.mark.parametrize("estimator", CLOSED_FORM)
    def test_smaller_alpha_is_wider(self, estimator):
        """Width grows as alpha shrinks."""
        for t in random_tables(100):
            widths = [estimator(t, a).width for a in (0.2, 0.1, 0.05, 0.01, 0.001)]
            assert all(w1 < w2 for w1, w2 in zip(widths, widths[1:]))

    @pytest.mark.parametrize("estimator", CLOSED_FORM)
    def test_bounds_positive_and_ordered(self, estimator):
        """Bounds are positive and bracket the point."""
        for t in random_tables(200):
            e = estimator(t, 0.05)
            assert 0 < e.lower < e.point < e.upper
            assert e.alpha == 0.05
