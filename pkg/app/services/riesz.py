"""Distances to subspaces, Riesz-lemma witnesses and the unit anti-ball compactness probe.

Every α-norm is Q(α)·‖·‖_base, so distances are computed once in the base
norm and scaled: exact projection for the euclidean norm, a linear program
for the maximum and 1-norms, Powell descent for other p-norms.
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import linprog, minimize

from app.core.tolerances import (
    CLOSEDNESS_RESOLUTION,
    BOUNDARY_BAND,
    EPSILON_TARGET_FACTOR,
    MINIMIZER_FTOL,
    MINIMIZER_MAX_ITER,
    RADIUS_DIRECTIONS,
    WITNESS_DISTANCE_SLACK,
    WITNESS_NORM_ATOL,
)
from app.errors.alphacut_errors import StrictProfileRequired
from app.errors.antinorm_errors import DimensionMismatch, SpaceMismatch
from app.errors.riesz_errors import InvalidEpsilon, SubspaceNotProper, WitnessConstructionFailed
from app.models.alpha_family import AlphaNormFamily, check_alpha
from app.models.antinorm import FuzzyAntiNorm
from app.models.space import BaseNormKind, VectorSpace
from app.models.subspace import Subspace
from app.schemas.report import CompactnessReport, RieszWitness, SubspaceDistance
from app.services.alphacut import unit_directions

logger = logging.getLogger(__name__)


def check_epsilon(epsilon: float) -> float:
    e = float(epsilon)
    if not 0.0 < e < 1.0:
        raise InvalidEpsilon(f"ε must lie in the open interval (0, 1), got {epsilon!r}")
    return e


def _same_space(space: VectorSpace, subspace: Subspace) -> None:
    if subspace.dimension != space.dimension:
        raise SpaceMismatch(f"subspace lives in R^{subspace.dimension}, the space is R^{space.dimension}")


# ---------------------------------------------------------------------------
# Base-norm projections
# ---------------------------------------------------------------------------

def _project_euclidean(v: np.ndarray, basis: np.ndarray) -> np.ndarray:
    gram = basis @ basis.T
    coefficients = np.linalg.solve(gram, basis @ v)
    return coefficients @ basis


def _project_linprog(v: np.ndarray, basis: np.ndarray, kind: str) -> np.ndarray:
    """Exact minimiser of ‖v - Bᵀc‖ for the maximum (`kind="max"`) or 1-norm (`kind="sum"`)."""
    k, n = basis.shape
    # |v - Bᵀc|_i <= e_i (1-norm) or <= s (maximum); rows: Bᵀc - e <= v and -Bᵀc - e <= -v
    slack_cols = n if kind == "sum" else 1
    slack = -np.eye(n) if kind == "sum" else -np.ones((n, 1))
    a_ub = np.block([[basis.T, slack], [-basis.T, slack]])
    b_ub = np.concatenate([v, -v])
    cost = np.concatenate([np.zeros(k), np.ones(slack_cols)])
    bounds = [(None, None)] * k + [(0, None)] * slack_cols
    result = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if not result.success:
        raise WitnessConstructionFailed(f"linear program for the subspace distance failed: {result.message}")
    return result.x[:k] @ basis


def _project_powell(v: np.ndarray, basis: np.ndarray, p: float) -> np.ndarray:
    start = np.linalg.lstsq(basis.T, v, rcond=None)[0]

    def objective(c: np.ndarray) -> float:
        return float(np.linalg.norm(v - c @ basis, ord=p))

    result = minimize(objective, start, method="Powell",
                      options={"ftol": MINIMIZER_FTOL, "xtol": MINIMIZER_FTOL, "maxiter": MINIMIZER_MAX_ITER})
    # keep the best point seen; Powell never returns worse than its start, but the check is cheap
    best = result.x if result.fun <= objective(start) else start
    logger.debug("Powell p=%s: %d iterations, objective %.3e", p, result.nit, objective(best))
    return best @ basis


def project(space: VectorSpace, v, subspace: Subspace) -> tuple[np.ndarray, str]:
    """Base-norm nearest point of the subspace to v, and the method that found it."""
    v = space.coerce(v)
    _same_space(space, subspace)
    if subspace.rank == 0:
        return space.zero(), "trivial"
    basis = subspace.matrix
    if space.ord == 2.0:
        return _project_euclidean(v, basis), "normal_equations"
    if space.base_norm is BaseNormKind.MAXIMUM:
        return _project_linprog(v, basis, "max"), "linprog"
    if space.ord == 1.0:
        return _project_linprog(v, basis, "sum"), "linprog"
    return _project_powell(v, basis, space.ord), "powell"


def distance_to_subspace(family: AlphaNormFamily, alpha: float, v, subspace: Subspace) -> SubspaceDistance:
    """inf_w ‖v - w‖*_α = Q(α)·dist_base(v, W), with the minimiser in W."""
    alpha = check_alpha(alpha)
    space = family.source.space
    v = space.coerce(v)
    minimizer, method = project(space, v, subspace)
    if subspace.contains(v):
        distance = 0.0
    else:
        distance = family.norm(v - minimizer, alpha)
    return SubspaceDistance(distance=distance, minimizer=minimizer.tolist(), method=method)


# ---------------------------------------------------------------------------
# Riesz witness
# ---------------------------------------------------------------------------

def first_vector_outside(subspace: Subspace) -> np.ndarray:
    for i in range(subspace.dimension):
        e = np.zeros(subspace.dimension)
        e[i] = 1.0
        if not subspace.contains(e):
            return e
    raise SubspaceNotProper("subspace not proper: it spans the whole space, so no witness exists")


def riesz_witness(antinorm: FuzzyAntiNorm, alpha: float, subspace: Subspace, epsilon: float) -> RieszWitness:
    """y with ‖y‖*_α = 1 and inf_w ‖y - w‖*_α >= 1 - ε/2 > 1 - ε.

    v is the first standard basis vector outside W and y = (v - w₀)/‖v - w₀‖*_α
    with w₀ the nearest point; distance to W is invariant under translation by
    W, so dist(y, W) = dist(v, W)/‖v - w₀‖*_α.
    """
    alpha = check_alpha(alpha)
    epsilon = check_epsilon(epsilon)
    _same_space(antinorm.space, subspace)
    if not antinorm.is_strict:
        raise StrictProfileRequired(
            f"the Riesz construction needs a strict profile; the {antinorm.profile.kind} profile breaks the strictness condition"
        )
    if not subspace.is_proper:
        raise SubspaceNotProper(f"subspace not proper: rank {subspace.rank} equals the dimension")

    family = AlphaNormFamily.from_antinorm(antinorm)
    v = first_vector_outside(subspace)
    found = distance_to_subspace(family, alpha, v, subspace)
    w0 = np.asarray(found.minimizer)
    gap = family.norm(v - w0, alpha)
    target = 1.0 - EPSILON_TARGET_FACTOR * epsilon

    y = (v - w0) / gap
    unit = family.norm(y, alpha)
    # a fresh minimisation from y, independent of w₀
    lower_bound = distance_to_subspace(family, alpha, y, subspace).distance
    witness = RieszWitness(
        y=y.tolist(),
        alpha=alpha,
        epsilon=epsilon,
        source_vector=v.tolist(),
        minimizer=w0.tolist(),
        achieved_unit_norm=unit,
        achieved_distance_lower_bound=lower_bound,
    )
    if abs(unit - 1.0) > WITNESS_NORM_ATOL or not lower_bound >= target - WITNESS_DISTANCE_SLACK:
        raise WitnessConstructionFailed(f"witness does not re-verify: {witness}")
    logger.info("Riesz witness at α=%s, ε=%s: y=%s, distance %.6f", alpha, epsilon, witness.y, lower_bound)
    return witness


# ---------------------------------------------------------------------------
# Compactness probe
# ---------------------------------------------------------------------------

def compactness_probe(
    antinorm: FuzzyAntiNorm,
    alpha: float,
    samples: int,
    seed: int,
    dimension: Optional[int] = None,
) -> CompactnessReport:
    """Bounded and closed, on samples, for {x : ν(x, 1) <= 1 - α}.

    Bounded: every sampled member lies within 1/Q(α) in the base norm.
    Closed: on each probed ray the boundary point at radius 1/Q(α) is the
    limit of interior points r(1 - resolution) and belongs to the set.
    """
    alpha = check_alpha(alpha)
    if dimension is not None and dimension != antinorm.dimension:
        raise DimensionMismatch(f"requested n={dimension}, the anti-norm lives in R^{antinorm.dimension}")
    witness_u = None if antinorm.is_strict else antinorm.profile.strictness_witness()
    if witness_u is not None:
        logger.info("compactness probe at α=%s on a non-strict profile (witness u=%s)", alpha, witness_u)
    family = AlphaNormFamily.from_antinorm(antinorm)
    q = family.scale(alpha)
    expected = math.inf if q == 0.0 else 1.0 / q
    level = 1.0 - alpha
    rng = np.random.default_rng(seed)

    directions = unit_directions(antinorm, rng, samples)
    span = 2.0 * expected if math.isfinite(expected) else 1.0
    radii = rng.uniform(0.0, span, samples)
    xs = directions * radii[:, None]
    inside = antinorm.evaluate_batch(xs, 1.0) <= level
    max_inside = float(antinorm.space.norms(xs[inside]).max()) if np.any(inside) else 0.0
    bounded = max_inside <= expected + BOUNDARY_BAND

    rays = directions[:RADIUS_DIRECTIONS]
    interior = antinorm.evaluate_batch(rays * expected * (1.0 - CLOSEDNESS_RESOLUTION), 1.0) <= level
    boundary = antinorm.evaluate_batch(rays * expected, 1.0)
    gap = float(np.max(np.maximum(0.0, boundary - level)))
    closed = bool(np.all(interior)) and gap <= CLOSEDNESS_RESOLUTION

    interval = (-expected, expected) if antinorm.dimension == 1 else None
    report = CompactnessReport(
        alpha=alpha,
        dimension=antinorm.dimension,
        samples=samples,
        inside=int(np.sum(inside)),
        max_inside_radius=max_inside,
        expected_radius=expected,
        bounded=bool(bounded),
        closed=closed,
        closedness_gap=gap,
        interval=interval,
        strictness_witness=witness_u,
    )
    logger.info("compactness probe at α=%s: bounded=%s closed=%s radius %.6g", alpha, bounded, closed, max_inside)
    return report
