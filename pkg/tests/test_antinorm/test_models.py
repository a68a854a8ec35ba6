"""Spaces, decay profiles and pointwise evaluation of ν."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.errors.antinorm_errors import DimensionMismatch
from app.models import ReciprocalProfile, StepProfile, TabulatedProfile, VectorSpace
from app.services.antinorm import evaluate
from tests.conftest import make_antinorm


# ---------------------------------------------------------------------------
# VectorSpace
# ---------------------------------------------------------------------------

class TestVectorSpace:
    def test_euclidean_norm(self):
        assert VectorSpace(dimension=2).norm([3.0, 4.0]) == 5.0

    def test_maximum_norm(self):
        assert VectorSpace(dimension=3, base_norm="maximum").norm([1.0, -7.0, 2.0]) == 7.0

    def test_p_norm(self):
        space = VectorSpace(dimension=2, base_norm="p_norm", p=1.0)
        assert space.norm([1.0, -2.0]) == 3.0

    def test_p_norm_needs_p_at_least_one(self):
        with pytest.raises(ValueError):
            VectorSpace(dimension=2, base_norm="p_norm", p=0.5)

    def test_p_only_for_p_norm(self):
        with pytest.raises(ValueError):
            VectorSpace(dimension=2, base_norm="euclidean", p=3.0)

    def test_dimension_must_be_positive(self):
        with pytest.raises(ValidationError):
            VectorSpace(dimension=0)

    def test_wrong_shape_is_rejected(self):
        with pytest.raises(DimensionMismatch):
            VectorSpace(dimension=2).norm([1.0, 2.0, 3.0])


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

class TestProfiles:
    def test_reciprocal_needs_positive_k(self):
        with pytest.raises(ValidationError):
            ReciprocalProfile(k=-1.0)

    def test_reciprocal_value(self):
        assert float(ReciprocalProfile(k=2.0).value(2.0)) == 0.5

    def test_step_is_not_strict(self):
        profile = StepProfile()
        assert not profile.is_strict
        assert profile.strictness_witness() == 1.0

    def test_tabulated_knots_must_increase(self):
        with pytest.raises(ValidationError):
            TabulatedProfile(points=((1.0, 1.0), (1.0, 0.5)))

    def test_tabulated_levels_must_be_memberships(self):
        with pytest.raises(ValidationError):
            TabulatedProfile(points=((1.0, 1.2),))

    def test_tabulated_interpolates_and_extends(self):
        profile = TabulatedProfile(points=((1.0, 1.0), (3.0, 0.0)))
        assert profile.value([0.5, 2.0, 5.0]).tolist() == [1.0, 0.5, 0.0]

    def test_flat_fuzzy_segment_breaks_strictness(self):
        profile = TabulatedProfile(points=((1.0, 1.0), (2.0, 0.5), (3.0, 0.5), (4.0, 0.0)))
        assert profile.is_monotone
        assert not profile.is_strict
        assert profile.strictness_witness() == 2.0

    def test_increasing_segment_is_reported(self):
        profile = TabulatedProfile(points=((1.0, 1.0), (2.0, 0.3), (3.0, 0.6), (4.0, 0.0)))
        assert not profile.is_monotone
        assert profile.monotonicity_witness() == (2.0, 3.0)


# ---------------------------------------------------------------------------
# evaluate
# ---------------------------------------------------------------------------

class TestEvaluate:
    @pytest.mark.parametrize("t", [-1.0, 0.0])
    def test_non_positive_time_gives_one(self, reciprocal_1, t):
        assert evaluate(reciprocal_1, [3.0, 4.0], t) == 1.0

    def test_zero_vector(self, reciprocal_1):
        assert evaluate(reciprocal_1, [0.0, 0.0], 5.0) == 0.0

    def test_reciprocal_unit_vector(self, reciprocal_1):
        assert evaluate(reciprocal_1, [0.6, 0.8], 1.0) == pytest.approx(0.5, abs=1e-15)

    def test_step(self, step_plane):
        x = [2.0, 0.0]
        assert evaluate(step_plane, x, 3.0) == 0.0
        assert evaluate(step_plane, x, 2.0) == 1.0

    def test_exponential(self, exponential_1):
        assert evaluate(exponential_1, [1.0, 0.0], 1.0) == pytest.approx(math.exp(-1.0))

    def test_batch_with_one_time_per_row(self, reciprocal_1):
        xs = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 2.0]])
        values = reciprocal_1.evaluate_batch(xs, np.array([1.0, 1.0, -1.0]))
        assert values.tolist() == [0.5, 0.0, 1.0]

    def test_dimension_mismatch(self, reciprocal_1):
        with pytest.raises(DimensionMismatch):
            evaluate(reciprocal_1, [1.0, 0.0, 0.0], 1.0)

    def test_depends_only_on_base_norm(self):
        antinorm = make_antinorm(ReciprocalProfile(k=1.0), dimension=3, base_norm="maximum")
        assert evaluate(antinorm, [2.0, -1.0, 0.5], 2.0) == evaluate(antinorm, [0.0, 0.0, -2.0], 2.0)
