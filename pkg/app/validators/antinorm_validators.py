"""Sampled verification of the anti-norm axioms, t-monotonicity and the supremum and strictness conditions."""
import logging
from typing import Callable, Mapping, Optional

import numpy as np

from app.core.tolerances import (
    AXIOM_ATOL,
    SUPREMUM_ATOL,
    SUPREMUM_PROBES,
    VANISHING_ATOL,
    VANISHING_PROBES,
)
from app.models.antinorm import FuzzyAntiNorm
from app.models.profile import TabulatedProfile
from app.models.tconorm import TConorm, TConormKind
from app.schemas.report import AxiomCheck, AxiomReport
from app.validators.tconorm_validators import Rule

logger = logging.getLogger(__name__)


def _summarise(
    axiom: str,
    violations: np.ndarray,
    atol: float,
    witness: Callable[[int], dict],
    required: bool = True,
    note: Optional[str] = None,
) -> AxiomCheck:
    if violations.size == 0:
        return AxiomCheck(axiom=axiom, passed=True, required=required, note=note)
    worst = int(np.argmax(violations))
    worst_violation = float(violations[worst])
    passed = worst_violation <= atol
    check = AxiomCheck(
        axiom=axiom,
        passed=passed,
        required=required,
        samples_tested=int(violations.size),
        worst_violation=worst_violation,
        witness={} if passed else witness(worst),
        note=note,
    )
    if not passed:
        log = logger.warning if required else logger.info
        log("axiom %s violated by %g, witness %s", axiom, worst_violation, check.witness)
    return check


def _sample_vectors(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    return rng.standard_normal((m, n)) * np.power(10.0, rng.uniform(-2.0, 2.0, (m, 1)))


def _sample_times(rng: np.random.Generator, m: int) -> np.ndarray:
    return np.power(10.0, rng.uniform(-2.0, 2.0, m))


def verify_antinorm_axioms(
    antinorm: FuzzyAntiNorm,
    sample_count: int,
    seed: int,
    companion_rules: Optional[Mapping[str, Rule]] = None,
) -> AxiomReport:
    """Run every axiom check on one seeded sample.

    `companion_rules` are the conorms the triangle inequality under max must
    carry over to; all built-in conorms by default.
    """
    if sample_count < 1:
        raise ValueError(f"sample_count must be positive, got {sample_count}")
    m, n = sample_count, antinorm.dimension
    profile = antinorm.profile
    rng = np.random.default_rng(seed)

    xs = _sample_vectors(rng, m, n)
    ys = _sample_vectors(rng, m, n)
    s = _sample_times(rng, m)
    t = _sample_times(rng, m)
    c = rng.choice([-1.0, 1.0], m) * np.power(10.0, rng.uniform(-2.0, 2.0, m))
    norms = antinorm.space.norms(xs)
    zeros = np.zeros((m, n))
    nu = antinorm.evaluate_batch

    checks = []

    # ν(x, t) = 1 for t <= 0
    t_nonpositive = -np.power(10.0, rng.uniform(-3.0, 3.0, m))
    t_nonpositive[: max(1, m // 10)] = 0.0
    boundary = np.abs(nu(xs, t_nonpositive) - 1.0)
    checks.append(_summarise(
        "boundary", boundary, 0.0,
        lambda i: {"x": xs[i].tolist(), "t": float(t_nonpositive[i]), "value": float(nu(xs[i:i + 1], t_nonpositive[i])[0])},
    ))

    # weak form: ν(θ, t) = 0 for t > 0 and ν(x, ·) not identically 0 for x ≠ θ
    at_zero = nu(zeros, t)
    near_zero_time = 1e-3 * norms
    detected = nu(xs, near_zero_time)
    zero_detection = np.concatenate([np.abs(at_zero), (detected == 0.0).astype(float)])
    vanishes = nu(xs, norms * VANISHING_PROBES[0]) == 0.0
    note = "weak form: ν(θ, t) = 0 for t > 0 and ν(x, ·) not identically 0 for x ≠ θ"
    if np.any(vanishes):
        note += "; the strict form fails (ν(x, t) = 0 for some x ≠ θ at large t)"

    def zero_witness(i: int) -> dict:
        if i < m:
            return {"x": zeros[i].tolist(), "t": float(t[i]), "value": float(at_zero[i])}
        j = i - m
        return {"x": xs[j].tolist(), "t": float(near_zero_time[j]), "value": float(detected[j])}

    checks.append(_summarise("zero_detection", zero_detection, 0.0, zero_witness, note=note))

    # ν(cx, t) = ν(x, t/|c|)
    scaled = nu(xs * c[:, None], t)
    rescaled = nu(xs, t / np.abs(c))
    checks.append(_summarise(
        "homogeneity", np.abs(scaled - rescaled), AXIOM_ATOL,
        lambda i: {"x": xs[i].tolist(), "c": float(c[i]), "t": float(t[i]),
                   "nu_cx_t": float(scaled[i]), "nu_x_t_over_c": float(rescaled[i])},
    ))

    # ν(x + y, s + t) <= ν(x, s) ⋄ ν(y, t)
    lhs = nu(xs + ys, s + t)
    nu_x, nu_y = nu(xs, s), nu(ys, t)
    rhs = antinorm.conorm.rule(nu_x, nu_y)
    checks.append(_summarise(
        "triangle", np.maximum(0.0, lhs - rhs), AXIOM_ATOL,
        lambda i: {"x": xs[i].tolist(), "y": ys[i].tolist(), "s": float(s[i]), "t": float(t[i]),
                   "nu_sum": float(lhs[i]), "nu_x_s": float(nu_x[i]), "nu_y_t": float(nu_y[i])},
        note=f"conorm {antinorm.conorm.kind.value}",
    ))

    # where the inequality holds under max it must hold under every companion conorm
    rules = companion_rules if companion_rules is not None else {
        kind.value: TConorm(kind=kind).rule for kind in TConormKind
    }
    under_max = lhs - np.maximum(nu_x, nu_y) <= AXIOM_ATOL
    companion_rhs = {name: np.asarray(rule(nu_x, nu_y), dtype=float) for name, rule in rules.items()}
    companion_gap = np.column_stack([np.maximum(0.0, lhs - rhs_k) for rhs_k in companion_rhs.values()])
    implication = np.where(under_max, companion_gap.max(axis=1), 0.0)
    checks.append(_summarise(
        "triangle_conorm_implication", implication, AXIOM_ATOL,
        lambda i: {"x": xs[i].tolist(), "y": ys[i].tolist(), "s": float(s[i]), "t": float(t[i]),
                   "nu_sum": float(lhs[i]), "nu_x_s": float(nu_x[i]), "nu_y_t": float(nu_y[i]),
                   "rhs": {name: float(values[i]) for name, values in companion_rhs.items()}},
        note=f"companions {sorted(rules)}",
    ))

    # lim_{t→∞} ν(x, t) = 0, probed at t = P·‖x‖
    probes = np.column_stack([nu(xs, norms * p) for p in VANISHING_PROBES])
    rising = np.max(np.maximum(0.0, np.diff(probes, axis=1)), axis=1)
    vanishing = np.maximum(rising, np.maximum(0.0, probes[:, -1] - VANISHING_ATOL))
    checks.append(_summarise(
        "vanishing", vanishing, 0.0,
        lambda i: {"x": xs[i].tolist(), "t": [float(norms[i] * p) for p in VANISHING_PROBES],
                   "values": probes[i].tolist()},
    ))

    # t ↦ ν(x, t) non-increasing
    t_low = np.minimum(s, t) * norms
    t_high = np.maximum(s, t) * norms
    low_values, high_values = nu(xs, t_low), nu(xs, t_high)
    increase = np.maximum(0.0, high_values - low_values)
    witnesses = [
        lambda i: {"x": xs[i].tolist(), "t1": float(t_low[i]), "t2": float(t_high[i]),
                   "nu_t1": float(low_values[i]), "nu_t2": float(high_values[i])}
    ]
    if isinstance(profile, TabulatedProfile) and profile.knots.size > 1:
        # probe consecutive knots so an increasing segment cannot hide between samples
        x0 = xs[0]
        norm0 = float(norms[0])
        knot_times = profile.knots * norm0
        knot_values = nu(np.repeat(x0[None, :], knot_times.size, axis=0), knot_times)
        knot_increase = np.maximum(0.0, np.diff(knot_values))
        increase = np.concatenate([increase, knot_increase])
        witnesses.append(
            lambda j: {"x": x0.tolist(), "t1": float(knot_times[j]), "t2": float(knot_times[j + 1]),
                       "nu_t1": float(knot_values[j]), "nu_t2": float(knot_values[j + 1])}
        )
    checks.append(_summarise(
        "monotonicity", increase, AXIOM_ATOL,
        lambda i: witnesses[0](i) if i < m else witnesses[1](i - m),
    ))

    # sup_t ν(x, t) = 1 for x ≠ θ, probed at t = ‖x‖·2^-10, 2^-20, 2^-30
    sup_probes = np.column_stack([nu(xs, norms * p) for p in SUPREMUM_PROBES])
    falling = np.max(np.maximum(0.0, -np.diff(sup_probes, axis=1)), axis=1)
    supremum = np.maximum(falling, np.maximum(0.0, (1.0 - sup_probes[:, -1]) - SUPREMUM_ATOL))
    checks.append(_summarise(
        "supremum", supremum, 0.0,
        lambda i: {"x": xs[i].tolist(), "t": [float(norms[i] * p) for p in SUPREMUM_PROBES],
                   "values": sup_probes[i].tolist()},
        required=False,
        note="checked as sup over t > 0 of ν(x, t) = 1 for x ≠ θ",
    ))

    # continuous and strictly decreasing where 0 < ν < 1
    fuzzy = (low_values > 0.0) & (low_values < 1.0) & (t_high > t_low)
    flat = (fuzzy & (high_values >= low_values)).astype(float)
    witness_u = profile.strictness_witness()
    strictness = np.concatenate([[0.0 if witness_u is None else 1.0], flat])

    def strict_witness(i: int) -> dict:
        if i == 0:
            u = float(witness_u)
            return {"u": u, "f_at_u": float(profile.value(u)),
                    "f_after_u": float(profile.value(np.nextafter(u, np.inf)))}
        return witnesses[0](i - 1)

    checks.append(_summarise("strictness", strictness, 0.0, strict_witness, required=False))

    subject = f"antinorm:{profile.kind}/{antinorm.space.base_norm.value}/{antinorm.conorm.kind.value}"
    report = AxiomReport(subject=subject, sample_count=sample_count, seed=seed, checks=checks)
    failed = [ch.axiom for ch in report.checks if not ch.passed]
    logger.info("%s (n=%d): %d samples, passed=%s, failed=%s", subject, n, m, report.passed, failed)
    return report
