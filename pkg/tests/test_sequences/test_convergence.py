"""Convergence, Cauchy and completeness diagnostics for sequences."""
import pytest

from app.errors.antinorm_errors import DimensionMismatch, SpaceMismatch
from app.errors.sequence_errors import InsufficientData, MissingCandidateLimit
from app.models import AlphaNormFamily, ExplicitSequence, GeneratorSequence, ReciprocalProfile
from app.schemas.report import Verdict
from app.services.sequences import (
    alpha_norm_cauchy,
    alpha_norm_converges,
    completeness_diagnostic,
    equivalence_check,
    fuzzy_alpha_cauchy,
    fuzzy_alpha_converges,
    fuzzy_converges,
    implication_suite,
    membership_trace,
)
from tests.conftest import make_antinorm

ALPHAS = [0.1, 0.5, 0.9]
BASE = (1.0, 2.0)
DIRECTION = (3.0, 4.0)


def generator(rate: str, **extra) -> GeneratorSequence:
    return GeneratorSequence(base=BASE, direction=DIRECTION, rate=rate, candidate_limit=BASE, **extra)


VANISHING = {
    "harmonic": generator("harmonic"),
    "inverse_square": generator("inverse_square"),
    "geometric": generator("geometric", q=0.5),
}

ALTERNATING = ExplicitSequence(
    terms=tuple((-1.0 if n % 2 else 1.0, 0.0) for n in range(1, 13)),
    candidate_limit=(0.0, 0.0),
)


# ---------------------------------------------------------------------------
# Sequence models
# ---------------------------------------------------------------------------

class TestSequenceModels:
    def test_generator_terms(self):
        terms = generator("harmonic").window(1, 3)
        assert terms.tolist() == [[4.0, 6.0], [2.5, 4.0]]

    def test_constant_rate_limit(self):
        assert generator("constant").limit().tolist() == [4.0, 6.0]

    def test_geometric_needs_q(self):
        with pytest.raises(ValueError):
            GeneratorSequence(base=BASE, direction=DIRECTION, rate="geometric")

    def test_ragged_terms(self):
        with pytest.raises(ValueError):
            ExplicitSequence(terms=((1.0, 2.0), (1.0,)))

    def test_window_outside_explicit_list(self):
        with pytest.raises(InsufficientData):
            ALTERNATING.window(10, 14)


# ---------------------------------------------------------------------------
# Fuzzy α-anti-convergence
# ---------------------------------------------------------------------------

class TestFuzzyConvergence:
    @pytest.mark.parametrize("name", list(VANISHING))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_vanishing_generators_converge(self, reciprocal_1, name, alpha):
        verdict = fuzzy_alpha_converges(reciprocal_1, VANISHING[name], alpha)
        assert verdict.verdict is Verdict.CONVERGES
        assert all(w < 1.0 - alpha for w in verdict.worst_tail_membership)
        assert verdict.source == "closed_form"

    def test_harmonic_on_a_small_grid(self, reciprocal_1):
        verdict = fuzzy_alpha_converges(reciprocal_1, VANISHING["harmonic"], 0.5, t_grid=[0.1, 1.0, 10.0])
        assert verdict.verdict is Verdict.CONVERGES
        assert verdict.t_grid == [0.1, 1.0, 10.0]
        assert verdict.tail_window[1] >= 10_000

    def test_constant_sequence_converges(self, reciprocal_1):
        constant = GeneratorSequence(base=BASE, direction=(0.0, 0.0), rate="constant", candidate_limit=BASE)
        for alpha in ALPHAS:
            assert fuzzy_alpha_converges(reciprocal_1, constant, alpha).verdict is Verdict.CONVERGES

    def test_constant_offset_fails_with_witness(self, reciprocal_1):
        verdict = fuzzy_alpha_converges(reciprocal_1, generator("constant"), 0.5)
        assert verdict.verdict is Verdict.FAILS
        assert verdict.witness["limit_membership"] >= 0.5
        assert verdict.witness["t"] in verdict.t_grid

    def test_alternating_list_fails(self, reciprocal_1):
        verdict = fuzzy_alpha_converges(reciprocal_1, ALTERNATING, 0.5, tail=6)
        assert verdict.verdict is Verdict.FAILS
        assert verdict.source == "window"
        assert verdict.witness["value"] > 0.5

    def test_short_list_is_insufficient(self, reciprocal_1):
        with pytest.raises(InsufficientData):
            fuzzy_alpha_converges(reciprocal_1, ALTERNATING, 0.5, tail=50)

    def test_candidate_limit_is_required(self, reciprocal_1):
        sequence = GeneratorSequence(base=BASE, direction=DIRECTION, rate="harmonic")
        with pytest.raises(MissingCandidateLimit):
            fuzzy_alpha_converges(reciprocal_1, sequence, 0.5)

    def test_dimension_mismatch(self, reciprocal_2_in_3d):
        with pytest.raises(DimensionMismatch):
            fuzzy_alpha_converges(reciprocal_2_in_3d, VANISHING["harmonic"], 0.5)

    def test_membership_limit_zero(self, reciprocal_1):
        verdict = fuzzy_converges(reciprocal_1, VANISHING["geometric"])
        assert verdict.verdict is Verdict.CONVERGES
        assert fuzzy_converges(reciprocal_1, generator("constant")).verdict is Verdict.FAILS


# ---------------------------------------------------------------------------
# Cauchy
# ---------------------------------------------------------------------------

class TestCauchy:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_harmonic_is_cauchy(self, reciprocal_1, alpha):
        assert fuzzy_alpha_cauchy(reciprocal_1, VANISHING["harmonic"], alpha).verdict is Verdict.CAUCHY

    def test_constant_offset_is_cauchy(self, reciprocal_1):
        assert fuzzy_alpha_cauchy(reciprocal_1, generator("constant"), 0.5).verdict is Verdict.CAUCHY

    def test_alternating_is_not_cauchy(self, reciprocal_1):
        verdict = fuzzy_alpha_cauchy(reciprocal_1, ALTERNATING, 0.5, t_grid=[0.01], tail=6, p_max=1)
        assert verdict.verdict is Verdict.FAILS
        assert verdict.witness["p"] == 1
        assert verdict.witness["t"] == 0.01

    def test_alpha_norm_cauchy(self, reciprocal_1):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        assert alpha_norm_cauchy(family, VANISHING["inverse_square"], 0.9).verdict is Verdict.CAUCHY
        assert alpha_norm_cauchy(family, ALTERNATING, 0.5, tail=6, p_max=1).verdict is Verdict.FAILS


# ---------------------------------------------------------------------------
# α-norm convergence and equivalence
# ---------------------------------------------------------------------------

class TestEquivalence:
    @pytest.mark.parametrize("name", list(VANISHING))
    def test_alpha_norm_convergence(self, reciprocal_1, name):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        verdict = alpha_norm_converges(family, VANISHING[name], 0.5)
        assert verdict.verdict is Verdict.CONVERGES
        assert verdict.estimates[0] <= 1e-6

    def test_constant_offset_alpha_norm(self, reciprocal_1):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        verdict = alpha_norm_converges(family, generator("constant"), 0.5)
        assert verdict.verdict is Verdict.FAILS
        # Q(0.5) · ‖(3, 4)‖
        assert verdict.estimates == [pytest.approx(5.0)]

    @pytest.mark.parametrize("name", list(VANISHING))
    def test_vanishing_generators_agree(self, reciprocal_1, name):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        report = equivalence_check(reciprocal_1, family, VANISHING[name], ALPHAS)
        assert report.passed
        assert all(row.fuzzy.verdict is Verdict.CONVERGES for row in report.rows)
        assert [row.alpha for row in report.rows] == ALPHAS

    def test_constant_offset_fails_on_both_sides(self, reciprocal_1):
        family = AlphaNormFamily.from_antinorm(reciprocal_1)
        report = equivalence_check(reciprocal_1, family, generator("constant"), ALPHAS)
        assert report.passed
        for row in report.rows:
            assert row.fuzzy.verdict is Verdict.FAILS
            assert row.alpha_norm.verdict is Verdict.FAILS

    def test_family_from_another_antinorm(self, reciprocal_1):
        other = AlphaNormFamily.from_antinorm(make_antinorm(ReciprocalProfile(k=2.0)))
        with pytest.raises(SpaceMismatch):
            equivalence_check(reciprocal_1, other, VANISHING["harmonic"], ALPHAS)


# ---------------------------------------------------------------------------
# Implications and completeness
# ---------------------------------------------------------------------------

class TestImplications:
    @pytest.mark.parametrize("name", list(VANISHING))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_suite_holds(self, reciprocal_1, name, alpha):
        report = implication_suite(reciprocal_1, VANISHING[name], alpha)
        assert report.passed
        convergent = report.checks[0]
        assert convergent.name == "convergent_implies_cauchy"
        assert convergent.premise and convergent.conclusion

    def test_second_limit_is_rejected(self, reciprocal_1):
        report = implication_suite(reciprocal_1, VANISHING["harmonic"], 0.5)
        uniqueness = next(c for c in report.checks if c.name == "limit_uniqueness")
        assert uniqueness.detail["second_limit"] == [4.0, 6.0]
        assert uniqueness.detail["second_limit_verdict"] == "fails"
        assert uniqueness.holds

    def test_constant_sequence_holds_trivially(self, reciprocal_1):
        constant = GeneratorSequence(base=BASE, direction=(0.0, 0.0), rate="constant", candidate_limit=BASE)
        assert implication_suite(reciprocal_1, constant, 0.5).passed

    def test_completeness_consistent_for_harmonic(self, reciprocal_1):
        diagnostic = completeness_diagnostic(reciprocal_1, VANISHING["harmonic"], 0.5)
        assert diagnostic.status == "consistent"
        assert diagnostic.alpha_norm_cauchy is Verdict.CAUCHY

    def test_completeness_inconclusive_without_alpha_norm_cauchy(self, reciprocal_1):
        diagnostic = completeness_diagnostic(reciprocal_1, ALTERNATING, 0.5, tail=6, p_max=1)
        assert diagnostic.status == "inconclusive"

    def test_membership_trace(self, reciprocal_1):
        trace = membership_trace(reciprocal_1, VANISHING["harmonic"], t_grid=[1.0], tail=3)
        assert [n for n, _, _ in trace] == [9_998, 9_999, 10_000]
        n, t, value = trace[-1]
        # ‖(3, 4)/n‖ = 5/n, ν = (5/n) / (1 + 5/n)
        assert value == pytest.approx(5.0 / (n + 5.0), rel=1e-12)
