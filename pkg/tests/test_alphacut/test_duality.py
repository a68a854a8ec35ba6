"""Rebuilding ν from its α-norms, α-continuity and the unit anti-ball."""
import math

import numpy as np
import pytest

from app.models import ExponentialProfile, ReciprocalProfile
from app.services.alphacut import (
    alpha_continuity_probe,
    boundary_radius,
    family_of,
    family_round_trip,
    reconstruct,
    reconstruction_grid,
    round_trip_error,
    unit_anti_ball_identity,
)
from tests.conftest import make_antinorm


# ---------------------------------------------------------------------------
# reconstruct / round_trip_error
# ---------------------------------------------------------------------------

class TestReconstruct:
    def test_origin_at_time_zero(self, reciprocal_1):
        assert reconstruct(family_of(reciprocal_1), [0.0, 0.0], 0.0) == 1.0

    def test_unit_vector(self, reciprocal_1):
        assert reconstruct(family_of(reciprocal_1), [1.0, 0.0], 1.0) == pytest.approx(0.5, abs=1e-9)

    def test_zero_vector_positive_time(self, reciprocal_1):
        assert reconstruct(family_of(reciprocal_1), [0.0, 0.0], 1.0) == 0.0

    @pytest.mark.parametrize("profile", [ReciprocalProfile(k=1.0), ExponentialProfile(rate=1.0)],
                             ids=["reciprocal", "exponential"])
    @pytest.mark.parametrize("dimension", [1, 2, 3])
    def test_round_trip_on_seeded_grid(self, profile, dimension):
        antinorm = make_antinorm(profile, dimension=dimension)
        result = round_trip_error(antinorm, 100, 100, 7)
        assert len(result.points) == 10_000
        assert result.sup_error <= 1e-6
        assert result.caveat is None

    def test_grid_of_non_positive_times(self, reciprocal_1):
        result = reconstruction_grid(reciprocal_1, [[1.0, 2.0], [0.0, 0.0]], [-1.0, 0.0])
        assert result.sup_error == 0.0
        assert all(p.nu == p.nu_prime == 1.0 for p in result.points)

    def test_step_profile_carries_a_caveat(self, step_plane):
        result = round_trip_error(step_plane, 10, 10, 7)
        assert result.caveat is not None
        assert "strictness" in result.caveat

    def test_tabulated_profile(self, strict_tabulated):
        assert round_trip_error(strict_tabulated, 5, 5, 7).sup_error <= 1e-6

    def test_sup_error_must_match_points(self, reciprocal_1):
        result = reconstruction_grid(reciprocal_1, [[1.0, 0.0]], [1.0])
        with pytest.raises(ValueError):
            type(result)(points=result.points, sup_error=result.sup_error + 1.0)


# ---------------------------------------------------------------------------
# alpha_continuity_probe
# ---------------------------------------------------------------------------

class TestAlphaContinuity:
    def test_harmonic_errors_shrink(self, reciprocal_1):
        report = alpha_continuity_probe(family_of(reciprocal_1), [1.0, 0.0], 0.5, 10_000)
        assert report.passed
        for trace in report.traces:
            assert trace.monotone
            assert trace.errors == sorted(trace.errors, reverse=True)
            assert trace.ns == [1, 10, 100, 1_000, 10_000]

    @pytest.mark.parametrize("profile", [ReciprocalProfile(k=1.0), ExponentialProfile(rate=2.0)],
                             ids=["reciprocal", "exponential"])
    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
    def test_quadratic_schedule_within_1e_6(self, profile, alpha):
        family = family_of(make_antinorm(profile))
        report = alpha_continuity_probe(family, [1.0, 0.0], alpha, 10_000, schedule="quadratic")
        assert report.passed
        assert {trace.side for trace in report.traces} == {"below", "above"}
        for trace in report.traces:
            assert trace.error_at_n_max <= 1e-6
            assert trace.error_at_n_max <= trace.mean_value_bound + 1e-12

    def test_step_is_trivial(self, step_plane):
        report = alpha_continuity_probe(family_of(step_plane), [1.0, 0.0], 0.3, 100)
        assert report.trivial
        assert report.passed
        assert all(e == 0.0 for trace in report.traces for e in trace.errors)

    @pytest.mark.parametrize("schedule", ["harmonic", "quadratic"])
    def test_jump_in_the_scale_fails(self, plateau_tabulated, schedule):
        report = alpha_continuity_probe(family_of(plateau_tabulated), [1.0, 0.0], 0.5, 10_000, schedule=schedule)
        above = next(trace for trace in report.traces if trace.side == "above")
        assert not report.passed
        assert not report.trivial
        assert report.strictness_witness == 2.0
        assert above.monotone
        assert not above.decays
        # Q(0.5) = 2 while Q(0.5+) = 3
        assert above.error_at_n_max == pytest.approx(1.0, abs=1e-3)

    def test_quadratic_end_must_be_within_1e_6(self, reciprocal_1):
        # Q′(0.9) = 100, so n_max = 10 leaves an error near 1e-1
        report = alpha_continuity_probe(family_of(reciprocal_1), [1.0, 0.0], 0.9, 10, schedule="quadratic")
        assert all(trace.monotone and trace.decays for trace in report.traces)
        assert not report.passed

    def test_strict_table_passes(self, strict_tabulated):
        report = alpha_continuity_probe(family_of(strict_tabulated), [1.0, 0.0], 0.5, 1_000)
        assert report.passed
        assert report.strictness_witness is None

    def test_unknown_schedule(self, reciprocal_1):
        with pytest.raises(ValueError):
            alpha_continuity_probe(family_of(reciprocal_1), [1.0, 0.0], 0.5, 10, schedule="cubic")


# ---------------------------------------------------------------------------
# family_round_trip
# ---------------------------------------------------------------------------

class TestFamilyRoundTrip:
    @pytest.mark.parametrize("fixture", ["reciprocal_1", "exponential_1", "step_plane"])
    def test_within_1e_6(self, request, fixture):
        report = family_round_trip(family_of(request.getfixturevalue(fixture)), 200, 7)
        assert report.passed
        assert report.sup_error <= 1e-6

    def test_first_sample_is_zero_vector(self, reciprocal_1):
        report = family_round_trip(family_of(reciprocal_1), 1, 7)
        assert report.sup_error == 0.0
        assert report.worst["x"] == [0.0, 0.0]


# ---------------------------------------------------------------------------
# unit_anti_ball_identity
# ---------------------------------------------------------------------------

class TestUnitAntiBall:
    def test_reciprocal_in_three_dimensions(self):
        antinorm = make_antinorm(ReciprocalProfile(k=1.0), dimension=3)
        report = unit_anti_ball_identity(antinorm, 0.5, 10_000, 7)
        assert report.passed
        assert report.disagreements == 0
        assert report.bounding_radius == pytest.approx(1.0, abs=1e-6)
        assert report.strictness_witness is None

    def test_radius_shrinks_with_alpha(self, reciprocal_1):
        report = unit_anti_ball_identity(reciprocal_1, 0.9, 2_000, 7)
        assert report.passed
        assert report.expected_radius == pytest.approx(1.0 / 9.0, rel=1e-12)
        assert report.bounding_radius == pytest.approx(1.0 / 9.0, abs=1e-6)

    def test_boundary_radius_of_one_direction(self, reciprocal_1):
        radius = boundary_radius(reciprocal_1, [0.0, 1.0], 0.5)
        assert radius == pytest.approx(1.0, rel=1e-9)

    def test_step_ball_has_radius_one(self, step_plane):
        report = unit_anti_ball_identity(step_plane, 0.5, 2_000, 7)
        assert report.passed
        assert report.strictness_witness == 1.0
        assert math.isclose(report.bounding_radius, 1.0, abs_tol=1e-6)

    def test_plateau_table_is_marked_non_strict(self, plateau_tabulated):
        report = unit_anti_ball_identity(plateau_tabulated, 0.5, 2_000, 7)
        assert report.strictness_witness == 2.0
        assert report.expected_radius == pytest.approx(0.5, rel=1e-9)
