"""Checks of the α-norm lemmas and of the per-α norm axioms."""
import logging

import numpy as np
from scipy.optimize import root_scalar

from app.core.tolerances import (
    BISECTION_MAX_ITER,
    CLOSED_FORM_RTOL,
    HOMOGENEITY_RTOL,
    LEMMA_ATOL,
    TRIANGLE_SLACK,
)
from app.errors.alphacut_errors import StrictProfileRequired, ZeroVectorNotAllowed
from app.models.alpha_family import AlphaNormFamily, check_alpha
from app.models.antinorm import FuzzyAntiNorm
from app.schemas.report import AxiomCheck, AxiomReport, LemmaReport
from app.services.alphacut import alpha_norm

logger = logging.getLogger(__name__)


def _require_strict(antinorm: FuzzyAntiNorm) -> None:
    if not antinorm.is_strict:
        raise StrictProfileRequired(
            f"strictness condition violated: the {antinorm.profile.kind} profile is not continuous and "
            f"strictly decreasing where 0 < ν < 1 (witness u={antinorm.profile.strictness_witness()})"
        )


def _solve_level(antinorm: FuzzyAntiNorm, norm: float, level: float, guess: float) -> float:
    """The s with ν(x, s) = level, by bracketed bisection around `guess`."""
    def gap(s: float) -> float:
        return antinorm.evaluate_scaled(norm, s) - level

    lo, hi = 0.5 * guess, 2.0 * guess
    while gap(lo) <= 0.0:
        lo *= 0.5
    while gap(hi) >= 0.0:
        hi *= 2.0
    result = root_scalar(gap, bracket=(lo, hi), method="bisect", xtol=1e-300, rtol=4 * np.finfo(float).eps,
                         maxiter=BISECTION_MAX_ITER)
    return float(result.root)


def verify_alpha_lemmas(antinorm: FuzzyAntiNorm, x, alpha: float) -> LemmaReport:
    """ν(x, ‖x‖*_α) <= 1 - α, and ‖x‖*_α = s ⇔ ν(x, s) = 1 - α, both ways."""
    alpha = check_alpha(alpha)
    _require_strict(antinorm)
    norm = antinorm.space.norm(x)
    if norm == 0.0:
        raise ZeroVectorNotAllowed("the α-norm lemmas are stated for x ≠ θ")

    level = 1.0 - alpha
    s = alpha_norm(antinorm, x, alpha)
    membership = antinorm.evaluate_scaled(norm, s)
    converse = _solve_level(antinorm, norm, level, s)
    report = LemmaReport(
        alpha=alpha,
        x=antinorm.space.coerce(x).tolist(),
        alpha_norm=s,
        membership_at_norm=membership,
        inequality_holds=membership <= level + LEMMA_ATOL,
        biconditional_error=abs(membership - level),
        converse_solution=converse,
        converse_relative_error=abs(converse - s) / s,
    )
    if not report.passed:
        logger.warning("α-norm lemmas fail at α=%s, x=%s: %s", alpha, report.x, report)
    return report


def verify_alpha_norm_axioms(antinorm: FuzzyAntiNorm, sample_count: int, seed: int) -> AxiomReport:
    """Ascending family, definiteness, homogeneity and triangle inequality of ‖·‖*_α."""
    if sample_count < 1:
        raise ValueError(f"sample_count must be positive, got {sample_count}")
    family = AlphaNormFamily.from_antinorm(antinorm)
    space = antinorm.space
    m, n = sample_count, antinorm.dimension
    rng = np.random.default_rng(seed)

    xs = rng.standard_normal((m, n)) * np.power(10.0, rng.uniform(-1.0, 1.0, (m, 1)))
    ys = rng.standard_normal((m, n)) * np.power(10.0, rng.uniform(-1.0, 1.0, (m, 1)))
    c = rng.choice([-1.0, 1.0], m) * np.power(10.0, rng.uniform(-2.0, 2.0, m))
    pairs = np.sort(rng.uniform(0.01, 0.99, (m, 2)), axis=1)
    a1, a2 = pairs[:, 0], pairs[:, 1]

    q1 = np.array([family.scale(a) for a in a1.tolist()])
    q2 = np.array([family.scale(a) for a in a2.tolist()])
    base_x, base_y = space.norms(xs), space.norms(ys)
    norm_x1 = q1 * base_x
    norm_x2 = q2 * base_x

    checks = []

    ascending = np.maximum(0.0, norm_x1 - norm_x2)
    checks.append(_check(
        "ascending_family", ascending, 0.0,
        lambda i: {"x": xs[i].tolist(), "alpha1": float(a1[i]), "alpha2": float(a2[i]),
                   "norm1": float(norm_x1[i]), "norm2": float(norm_x2[i])},
    ))

    zero_norm = np.array([family.norm(space.zero(), a) for a in a1[: min(m, 100)].tolist()])
    vanishing_nonzero = (norm_x1 == 0.0).astype(float)
    checks.append(_check(
        "definiteness", np.concatenate([np.abs(zero_norm), vanishing_nonzero]), 0.0,
        lambda i: ({"x": space.zero().tolist(), "alpha": float(a1[i]), "norm": float(zero_norm[i])}
                   if i < zero_norm.size else
                   {"x": xs[i - zero_norm.size].tolist(), "alpha": float(a1[i - zero_norm.size]), "norm": 0.0}),
    ))

    norm_cx = q1 * space.norms(xs * c[:, None])
    scaled = np.abs(c) * norm_x1
    homogeneity = np.abs(norm_cx - scaled) / np.maximum(scaled, np.finfo(float).tiny)
    checks.append(_check(
        "homogeneity", homogeneity, HOMOGENEITY_RTOL,
        lambda i: {"x": xs[i].tolist(), "c": float(c[i]), "alpha": float(a1[i]),
                   "norm_cx": float(norm_cx[i]), "abs_c_norm_x": float(scaled[i])},
    ))

    norm_sum = q1 * space.norms(xs + ys)
    triangle = np.maximum(0.0, norm_sum - norm_x1 - q1 * base_y)
    checks.append(_check(
        "triangle", triangle, TRIANGLE_SLACK,
        lambda i: {"x": xs[i].tolist(), "y": ys[i].tolist(), "alpha": float(a1[i]),
                   "norm_sum": float(norm_sum[i]), "norm_x": float(norm_x1[i]), "norm_y": float(q1[i] * base_y[i])},
    ))

    if family.has_closed_form:
        probe = a1[: min(m, 200)]
        closed = q1[: probe.size]
        bisected = np.array([family.scale_by_bisection(a) for a in probe.tolist()])
        relative = np.abs(bisected - closed) / closed
        checks.append(_check(
            "closed_form_agreement", relative, CLOSED_FORM_RTOL,
            lambda i: {"alpha": float(probe[i]), "closed_form": float(closed[i]), "bisection": float(bisected[i])},
        ))

    subject = f"alpha_norms:{antinorm.profile.kind}/{space.base_norm.value}"
    report = AxiomReport(subject=subject, sample_count=sample_count, seed=seed, checks=checks)
    logger.info("%s: %d samples, passed=%s", subject, m, report.passed)
    return report


def _check(axiom: str, violations: np.ndarray, atol: float, witness) -> AxiomCheck:
    worst = int(np.argmax(violations))
    value = float(violations[worst])
    passed = value <= atol
    if not passed:
        logger.warning("α-norm axiom %s violated by %g", axiom, value)
    return AxiomCheck(
        axiom=axiom,
        passed=passed,
        samples_tested=int(violations.size),
        worst_violation=value,
        witness={} if passed else witness(worst),
    )
