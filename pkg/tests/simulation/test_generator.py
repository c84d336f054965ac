"""Tests for Bernoulli table generation."""

import numpy as np
import pytest
from scipy.stats import chisquare

from odds_ratio_mc.models import StudyDesign
from odds_ratio_mc.simulation import PRESETS, RandomStream, cell_probabilities, generate_table


def generate_by_subject(design: StudyDesign, seed: int, index: int) -> tuple[int, int, int, int]:
    """Subject-at-a-time reference classification."""
    u = RandomStream(seed, index).uniforms(2 * design.n)
    a = b = c = d = 0
    for i in range(design.n):
        exposed = u[2 * i] < design.p_exposure
        p = design.p_disease_exposed if exposed else design.p_disease_unexposed
        diseased = u[2 * i + 1] < p
        if exposed and diseased:
            d += 1
        elif exposed:
            c += 1
        elif diseased:
            b += 1
        else:
            a += 1
    return a, b, c, d


class TestGenerateTable:
    """One table per replication from 2n uniforms."""

    def test_matches_subject_loop(self):
        """Vectorized counts equal a subject-by-subject classification."""
        design = PRESETS["protective"]
        for index in range(20):
            table = generate_table(design, RandomStream(99, index))
            assert table.cells == generate_by_subject(design, 99, index)

    def test_cells_sum_to_n(self):
        """Cells always sum to n."""
        design = StudyDesign(n=37, p_exposure=0.3, p_disease_exposed=0.6, p_disease_unexposed=0.2)
        for index in range(50):
            assert generate_table(design, RandomStream(1, index)).n == 37

    def test_consumes_two_uniforms_per_subject(self):
        """Each subject consumes two uniforms."""
        stream = RandomStream(5, 5)
        generate_table(PRESETS["harmful"], stream)
        assert stream.consumed == 400

    def test_reproducible(self):
        """The same stream key gives the same table."""
        design = PRESETS["harmful"]
        assert generate_table(design, RandomStream(8, 3)) == generate_table(
            design, RandomStream(8, 3)
        )

    def test_integer_cells(self):
        """Cells are whole numbers."""
        table = generate_table(PRESETS["protective"], RandomStream(2, 2))
        assert all(float(x).is_integer() for x in table.cells)

    def test_nearly_impossible_exposure(self):
        """A near-zero exposure probability leaves the exposed row empty."""
        design = StudyDesign(
            n=100, p_exposure=1e-12, p_disease_exposed=0.5, p_disease_unexposed=0.5
        )
        table = generate_table(design, RandomStream(4, 0))
        assert table.c == 0 and table.d == 0
        assert table.a + table.b == 100

    def test_mean_cells_match_expected_counts(self):
        """Mean cells over 10^4 tables are within 0.5 of the expected counts."""
        design = PRESETS["protective"]
        cells = np.array(
            [generate_table(design, RandomStream(2024, i)).cells for i in range(10_000)]
        )
        assert tuple(cells.mean(axis=0)) == pytest.approx((77.5, 22.5, 92.5, 7.5), abs=0.5)

    @pytest.mark.slow
    @pytest.mark.parametrize("preset", ["protective", "harmful"])
    def test_pooled_cells_fit_cell_probabilities(self, preset):
        """Pooled counts of 10^5 tables pass a chi-square fit at the 10^-3 level."""
        design = PRESETS[preset]
        replications = 100_000
        pooled = np.zeros(4)
        for i in range(replications):
            pooled += generate_table(design, RandomStream(777, i)).cells
        expected = replications * design.n * np.array(cell_probabilities(design))
        result = chisquare(pooled, f_exp=expected)
        assert result.pvalue > 1e-3
