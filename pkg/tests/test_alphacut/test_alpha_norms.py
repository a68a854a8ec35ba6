"""α-norm extraction, the lemmas behind it and the per-α norm axioms."""
import numpy as np
import pytest

from app.errors.alphacut_errors import InvalidAlpha, StrictProfileRequired, ZeroVectorNotAllowed
from app.models import AlphaNormFamily, ExponentialProfile, ReciprocalProfile
from app.services.alphacut import alpha_norm, alpha_norm_by_bisection, family_of
from app.validators.alphacut_validators import verify_alpha_lemmas, verify_alpha_norm_axioms
from tests.conftest import make_antinorm


# ---------------------------------------------------------------------------
# alpha_norm
# ---------------------------------------------------------------------------

class TestAlphaNorm:
    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
    def test_zero_vector(self, reciprocal_1, alpha):
        assert alpha_norm(reciprocal_1, [0.0, 0.0], alpha) == 0.0

    def test_reciprocal_unit_vector(self, reciprocal_1):
        assert alpha_norm(reciprocal_1, [1.0, 0.0], 0.5) == 1.0

    @pytest.mark.parametrize("alpha", [0.05, 0.5, 0.95])
    def test_step_is_the_base_norm(self, step_plane, alpha):
        assert alpha_norm(step_plane, [3.0, 4.0], alpha) == 5.0

    def test_reciprocal_k2(self):
        antinorm = make_antinorm(ReciprocalProfile(k=2.0))
        assert alpha_norm(antinorm, [3.0, 0.0], 0.25) == pytest.approx(2.0, rel=1e-12)

    @pytest.mark.parametrize("alpha", [0.1, 0.25, 0.5, 0.75, 0.9])
    def test_bisection_agrees_with_closed_form(self, reciprocal_1, exponential_1, alpha):
        x = [0.3, -1.7]
        for antinorm in (reciprocal_1, exponential_1):
            closed = alpha_norm(antinorm, x, alpha)
            assert alpha_norm_by_bisection(antinorm, x, alpha) == pytest.approx(closed, rel=1e-9)

    def test_tabulated_profile_uses_bisection(self, strict_tabulated):
        family = family_of(strict_tabulated)
        assert not family.has_closed_form
        # f(2) = 0.5
        assert alpha_norm(strict_tabulated, [1.0, 0.0], 0.5) == pytest.approx(2.0, rel=1e-9)

    def test_exponential_closed_form(self):
        antinorm = make_antinorm(ExponentialProfile(rate=2.0))
        assert alpha_norm(antinorm, [1.0, 0.0], 0.5) == pytest.approx(np.log(2.0) / 2.0, rel=1e-12)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.5])
    def test_alpha_outside_open_interval(self, reciprocal_1, alpha):
        with pytest.raises(InvalidAlpha):
            alpha_norm(reciprocal_1, [1.0, 0.0], alpha)

    def test_batch_norms_keep_zero_rows(self, reciprocal_1):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        assert family.norms(np.array([[0.0, 0.0], [0.0, 2.0]]), 0.5).tolist() == [0.0, 2.0]


# ---------------------------------------------------------------------------
# verify_alpha_lemmas
# ---------------------------------------------------------------------------

class TestAlphaLemmas:
    def test_unit_vector(self, reciprocal_1):
        report = verify_alpha_lemmas(reciprocal_1, [1.0, 0.0], 0.5)
        assert report.passed
        assert report.alpha_norm == 1.0
        assert report.membership_at_norm == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("fixture", ["reciprocal_1", "exponential_1", "reciprocal_2_in_3d"])
    def test_biconditional_on_random_inputs(self, request, fixture):
        antinorm = request.getfixturevalue(fixture)
        rng = np.random.default_rng(7)
        for _ in range(1_000):
            x = rng.standard_normal(antinorm.dimension) * 10.0 ** rng.uniform(-1.0, 1.0)
            alpha = rng.uniform(0.01, 0.99)
            report = verify_alpha_lemmas(antinorm, x, alpha)
            assert report.biconditional_error <= 1e-8
            assert report.passed

    def test_tabulated_profile(self, strict_tabulated):
        rng = np.random.default_rng(3)
        for _ in range(100):
            report = verify_alpha_lemmas(strict_tabulated, rng.standard_normal(2), rng.uniform(0.05, 0.95))
            assert report.passed

    def test_step_profile_is_rejected(self, step_plane):
        with pytest.raises(StrictProfileRequired, match="^strictness condition violated"):
            verify_alpha_lemmas(step_plane, [1.0, 0.0], 0.5)

    def test_zero_vector_is_rejected(self, reciprocal_1):
        with pytest.raises(ZeroVectorNotAllowed):
            verify_alpha_lemmas(reciprocal_1, [0.0, 0.0], 0.5)


# ---------------------------------------------------------------------------
# verify_alpha_norm_axioms
# ---------------------------------------------------------------------------

class TestAlphaNormAxioms:
    @pytest.mark.parametrize("fixture", ["reciprocal_1", "reciprocal_2_in_3d", "exponential_1", "step_plane"])
    def test_closed_form_profiles(self, request, fixture):
        report = verify_alpha_norm_axioms(request.getfixturevalue(fixture), 10_000, 7)
        assert report.passed
        assert [c.axiom for c in report.checks] == [
            "ascending_family", "definiteness", "homogeneity", "triangle", "closed_form_agreement",
        ]
        assert report.check("triangle").worst_violation <= 1e-9
        assert report.check("homogeneity").worst_violation <= 1e-12

    def test_tabulated_profile_has_no_closed_form_check(self, strict_tabulated):
        report = verify_alpha_norm_axioms(strict_tabulated, 300, 7)
        assert report.passed
        with pytest.raises(KeyError):
            report.check("closed_form_agreement")
