"""Independent sampled check of a Riesz witness."""
import logging

import numpy as np

from app.core.tolerances import SUBSPACE_SAMPLE_RADIUS, WITNESS_MEMBERSHIP_ATOL, WITNESS_NORM_ATOL
from app.models.alpha_family import AlphaNormFamily, check_alpha
from app.models.antinorm import FuzzyAntiNorm
from app.models.subspace import Subspace
from app.schemas.report import AxiomCheck, AxiomReport
from app.services.riesz import check_epsilon, distance_to_subspace

logger = logging.getLogger(__name__)


def verify_witness(
    antinorm: FuzzyAntiNorm,
    alpha: float,
    epsilon: float,
    y,
    subspace: Subspace,
    samples: int,
    seed: int,
) -> AxiomReport:
    """ν(y, 1) <= 1 - α, ‖y‖*_α = 1, and ν(y - w, 1 - ε) > 1 - α on sampled w ∈ W.

    The distance condition is the ν-form of ‖y - w‖*_α > 1 - ε. The sampled
    w have coefficients in [-R, R] on the basis rescaled to unit base norm;
    the exact nearest point of W is always included.
    """
    alpha = check_alpha(alpha)
    epsilon = check_epsilon(epsilon)
    space = antinorm.space
    y = space.coerce(y)
    level = 1.0 - alpha
    family = AlphaNormFamily.from_antinorm(antinorm)
    degenerate = space.is_zero(y)

    membership = antinorm.evaluate(y, 1.0)
    unit_membership = AxiomCheck(
        axiom="unit_membership",
        passed=membership <= level + WITNESS_MEMBERSHIP_ATOL,
        samples_tested=1,
        worst_violation=max(0.0, membership - level),
        witness={"y": y.tolist(), "t": 1.0, "value": membership},
    )

    norm = family.norm(y, alpha)
    unit_norm = AxiomCheck(
        axiom="unit_norm",
        passed=abs(norm - 1.0) <= WITNESS_NORM_ATOL,
        samples_tested=1,
        worst_violation=abs(norm - 1.0),
        witness={"y": y.tolist(), "alpha_norm": norm},
        note="degenerate input: y = θ" if degenerate else None,
    )

    rng = np.random.default_rng(seed)
    minimizer = np.asarray(distance_to_subspace(family, alpha, y, subspace).minimizer)
    if subspace.rank:
        basis = subspace.matrix / space.norms(subspace.matrix)[:, None]
        coefficients = rng.uniform(-SUBSPACE_SAMPLE_RADIUS, SUBSPACE_SAMPLE_RADIUS, (samples, subspace.rank))
        ws = np.vstack([minimizer[None, :], coefficients @ basis])
    else:
        ws = minimizer[None, :]
    values = antinorm.evaluate_batch(y[None, :] - ws, 1.0 - epsilon)
    shortfall = np.maximum(0.0, level - values)
    worst = int(np.argmax(shortfall))
    distance = AxiomCheck(
        axiom="distance",
        passed=bool(np.all(values > level - WITNESS_MEMBERSHIP_ATOL)),
        samples_tested=int(values.size),
        worst_violation=float(shortfall[worst]),
        witness={
            "w": ws[worst].tolist(),
            "t": 1.0 - epsilon,
            "value": float(values[worst]),
            "analytic_minimizer": worst == 0,
        },
        note="includes the exact nearest point of W",
    )

    checks = [unit_membership, unit_norm, distance]
    for check in checks:
        if not check.passed:
            logger.warning("Riesz witness check %s failed: %s", check.axiom, check.witness)
    return AxiomReport(subject="riesz_witness", sample_count=samples, seed=seed, checks=checks)
