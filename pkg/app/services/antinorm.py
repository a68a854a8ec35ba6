import logging
import math

import numpy as np

from app.core.tolerances import COMBINE_GRID_OCTAVES, COMBINE_GRID_PER_OCTAVE, TABULATION_ATOL
from app.errors.antinorm_errors import SpaceMismatch
from app.models.antinorm import FuzzyAntiNorm
from app.models.profile import StepProfile, TabulatedProfile
from app.models.tconorm import unit_value
from app.utils.bisection import first_true_above_zero

logger = logging.getLogger(__name__)


def evaluate(antinorm: FuzzyAntiNorm, x, t: float) -> float:
    return antinorm.evaluate(x, t)


def _breakpoints(profile) -> list[float]:
    """Points where the profile may jump or bend, so the merged grid keeps them."""
    if isinstance(profile, TabulatedProfile):
        knots = profile.knots
        return [float(np.nextafter(knots[0], 0.0)), *knots.tolist(), float(np.nextafter(knots[-1], np.inf))]
    if isinstance(profile, StepProfile):
        return [1.0, float(np.nextafter(1.0, np.inf))]
    return []


def merged_grid(*profiles) -> np.ndarray:
    low, high = COMBINE_GRID_OCTAVES
    exponents = np.arange(low * COMBINE_GRID_PER_OCTAVE, high * COMBINE_GRID_PER_OCTAVE + 1) / COMBINE_GRID_PER_OCTAVE
    grid = np.exp2(exponents)
    extra = [u for p in profiles for u in _breakpoints(p)]
    return np.unique(np.concatenate([grid, np.asarray(extra, dtype=float)]))


def combine_max(first: FuzzyAntiNorm, second: FuzzyAntiNorm) -> FuzzyAntiNorm:
    """Anti-norm whose profile is u ↦ max(f1(u), f2(u)), tabulated on a merged grid."""
    if first.space != second.space:
        raise SpaceMismatch(f"cannot combine anti-norms over {first.space} and {second.space}")
    if first.conorm != second.conorm:
        raise SpaceMismatch(
            f"cannot combine anti-norms with conorms {first.conorm.kind.value} and {second.conorm.kind.value}"
        )

    grid = merged_grid(first.profile, second.profile)
    levels = np.maximum(first.profile.value(grid), second.profile.value(grid))
    if abs(levels[0] - 1.0) <= TABULATION_ATOL:
        levels[0] = 1.0
    if abs(levels[-1]) <= TABULATION_ATOL:
        levels[-1] = 0.0

    profile = TabulatedProfile(points=tuple(zip(grid.tolist(), levels.tolist())))
    logger.debug("combined %s and %s on %d knots", first.profile.kind, second.profile.kind, grid.size)
    return FuzzyAntiNorm(space=first.space, profile=profile, conorm=first.conorm)


def is_fuzzy_bounded(antinorm: FuzzyAntiNorm, points, t: float, r: float) -> bool:
    """True when ν(x, t) < r for every point, i.e. (t, r) bounds the finite set."""
    r = unit_value(r)
    xs = antinorm.space.coerce_many(points)
    return bool(np.all(antinorm.evaluate_batch(xs, t) < r))


def bounding_witness(antinorm: FuzzyAntiNorm, points, r: float) -> float:
    """inf{t > 0 : ν(x, t) < r for every point}.

    Returns 0.0 when every point is θ and math.inf when no time works.
    """
    r = unit_value(r)
    if r == 0.0:
        return math.inf
    xs = antinorm.space.coerce_many(points)
    norms = antinorm.space.norms(xs)
    if not np.any(norms > 0.0):
        return 0.0
    return first_true_above_zero(
        lambda t: bool(np.all(antinorm.evaluate_batch(xs, t) < r)), start=float(norms.max())
    )
