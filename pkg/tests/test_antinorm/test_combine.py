"""Pointwise maximum of two anti-norms and fuzzy boundedness of finite sets."""
import math

import numpy as np
import pytest

from app.errors.antinorm_errors import SpaceMismatch
from app.models import ReciprocalProfile, StepProfile, TabulatedProfile, TConormKind
from app.services.antinorm import bounding_witness, combine_max, is_fuzzy_bounded, merged_grid
from app.validators.antinorm_validators import verify_antinorm_axioms
from tests.conftest import make_antinorm


def _knots(antinorm):
    return antinorm.profile.knots


# ---------------------------------------------------------------------------
# combine_max
# ---------------------------------------------------------------------------

class TestCombineMax:
    def test_with_itself_reproduces_the_profile_on_the_grid(self, reciprocal_1):
        combined = combine_max(reciprocal_1, reciprocal_1)
        assert isinstance(combined.profile, TabulatedProfile)
        u = _knots(combined)
        assert np.max(np.abs(combined.profile.value(u) - reciprocal_1.profile.value(u))) <= 1e-6

    def test_larger_k_dominates(self, reciprocal_1):
        k3 = make_antinorm(ReciprocalProfile(k=3.0))
        combined = combine_max(reciprocal_1, k3)
        u = _knots(combined)
        assert np.max(np.abs(combined.profile.value(u) - k3.profile.value(u))) <= 1e-6

    def test_step_with_reciprocal(self, reciprocal_1, step_plane):
        combined = combine_max(step_plane, reciprocal_1)
        u = _knots(combined)
        expected = np.where(u <= 1.0, 1.0, 1.0 / (1.0 + u))
        assert np.max(np.abs(combined.profile.value(u) - expected)) <= 1e-6

    def test_ends_are_snapped(self, reciprocal_1):
        levels = combine_max(reciprocal_1, reciprocal_1).profile.levels
        assert levels[0] == 1.0
        assert levels[-1] == 0.0

    def test_result_is_an_antinorm(self, reciprocal_1):
        combined = combine_max(reciprocal_1, make_antinorm(ReciprocalProfile(k=3.0)))
        assert verify_antinorm_axioms(combined, 2_000, 7).passed

    def test_grid_keeps_the_step_jump(self):
        grid = merged_grid(StepProfile())
        assert 1.0 in grid
        assert np.nextafter(1.0, np.inf) in grid

    def test_different_spaces(self, reciprocal_1, reciprocal_2_in_3d):
        with pytest.raises(SpaceMismatch):
            combine_max(reciprocal_1, reciprocal_2_in_3d)

    def test_different_conorms(self, reciprocal_1):
        other = make_antinorm(ReciprocalProfile(k=1.0), conorm=TConormKind.BOUNDED_SUM)
        with pytest.raises(SpaceMismatch):
            combine_max(reciprocal_1, other)


# ---------------------------------------------------------------------------
# Fuzzy boundedness
# ---------------------------------------------------------------------------

class TestFuzzyBoundedness:
    POINTS = [[1.0, 0.0], [0.0, 2.0]]

    def test_is_fuzzy_bounded(self, reciprocal_1):
        assert is_fuzzy_bounded(reciprocal_1, self.POINTS, 3.0, 0.5)
        assert not is_fuzzy_bounded(reciprocal_1, self.POINTS, 1.0, 0.5)

    def test_bounding_witness(self, reciprocal_1):
        # ν(x, t) < 0.5 iff t > ‖x‖
        assert bounding_witness(reciprocal_1, self.POINTS, 0.5) == pytest.approx(2.0, rel=1e-9)

    def test_only_zero_vectors(self, reciprocal_1):
        assert bounding_witness(reciprocal_1, [[0.0, 0.0]], 0.5) == 0.0

    def test_level_zero_is_never_reached(self, reciprocal_1):
        assert math.isinf(bounding_witness(reciprocal_1, self.POINTS, 0.0))

    def test_step_profile(self, step_plane):
        assert bounding_witness(step_plane, self.POINTS, 0.5) == pytest.approx(2.0, rel=1e-9)
