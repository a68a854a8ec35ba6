"""α-cut duality: extracting the α-norm family from ν and rebuilding ν from it.

‖x‖*_α = ∧{t > 0 : ν(x, t) <= 1 - α}
ν′(x, t) = ∧{1 - α : ‖x‖*_α <= t}

Every infimum over a continuum is a bisection on a monotone predicate
(`app.utils.bisection`), never a grid search.
"""
import logging
import math

import numpy as np

from app.core.tolerances import (
    BOUNDARY_BAND,
    CONTINUITY_ATOL,
    CONTINUITY_DECAY_CAP,
    CONTINUITY_DECAY_SLACK,
    RADIUS_ATOL,
    RADIUS_DIRECTIONS,
    ROUND_TRIP_ATOL,
)
from app.models.alpha_family import AlphaNormFamily, check_alpha
from app.models.antinorm import FuzzyAntiNorm
from app.models.profile import StepProfile
from app.schemas.report import (
    AntiBallReport,
    ContinuityReport,
    ContinuityTrace,
    FamilyRoundTripReport,
    ReconstructionPoint,
    ReconstructionResult,
)
from app.utils.bisection import first_true_above_zero, last_true_in_unit_interval

logger = logging.getLogger(__name__)

CONTINUITY_SCHEDULES = {"harmonic": 1, "quadratic": 2}

STEP_CAVEAT = (
    "profile is not continuous (strictness condition fails): ν′ and ν may differ on the jump t = ‖x‖"
)


def family_of(antinorm: FuzzyAntiNorm) -> AlphaNormFamily:
    return AlphaNormFamily.from_antinorm(antinorm)


def alpha_norm(antinorm: FuzzyAntiNorm, x, alpha: float) -> float:
    """‖x‖*_α; closed form where the profile has one, bisection otherwise. May be +inf."""
    value = family_of(antinorm).norm(x, alpha)
    if math.isinf(value):
        logger.warning("α-norm is +inf at α=%s: the profile never drops to %s", alpha, 1.0 - alpha)
    return value


def alpha_norm_by_bisection(antinorm: FuzzyAntiNorm, x, alpha: float) -> float:
    """‖x‖*_α by bisection directly on the non-increasing map t ↦ ν(x, t)."""
    level = 1.0 - check_alpha(alpha)
    norm = antinorm.space.norm(x)
    if norm == 0.0:
        return 0.0
    return first_true_above_zero(lambda t: antinorm.evaluate_scaled(norm, t) <= level, start=norm)


def reconstruct(family: AlphaNormFamily, x, t: float) -> float:
    """ν′(x, t) = ∧{1 - α : ‖x‖*_α <= t}, with ν′ = 1 on an empty set and for t <= 0."""
    if t <= 0.0:
        return 1.0
    norm = family.source.space.norm(x)
    if norm == 0.0:
        # every α qualifies; the infimum of 1 - α over (0, 1) is 0
        return 0.0
    supremum = last_true_in_unit_interval(lambda a: family.norm_of_base(norm, a) <= t)
    return 1.0 - supremum


def reconstruction_grid(antinorm: FuzzyAntiNorm, xs, ts) -> ReconstructionResult:
    """|ν′ - ν| on every (x, t) pair of the given grid."""
    family = family_of(antinorm)
    xs = antinorm.space.coerce_many(xs)
    ts = np.asarray(ts, dtype=float)
    points = []
    for x_id, x in enumerate(xs):
        nu_row = antinorm.evaluate_batch(np.repeat(x[None, :], ts.size, axis=0), ts)
        for t, nu in zip(ts.tolist(), nu_row.tolist()):
            nu_prime = reconstruct(family, x, t)
            points.append(ReconstructionPoint(
                x_id=x_id, x=x.tolist(), t=t, nu=nu, nu_prime=nu_prime, error=abs(nu_prime - nu),
            ))
    sup_error = max((p.error for p in points), default=0.0)
    caveat = None if antinorm.is_strict else STEP_CAVEAT
    return ReconstructionResult(points=points, sup_error=sup_error, caveat=caveat)


def round_trip_error(antinorm: FuzzyAntiNorm, x_samples: int, t_samples: int, seed: int) -> ReconstructionResult:
    """sup |ν′ - ν| over a seeded x_samples × t_samples grid."""
    rng = np.random.default_rng(seed)
    n = antinorm.dimension
    xs = rng.standard_normal((x_samples, n)) * np.power(10.0, rng.uniform(-1.0, 1.0, (x_samples, 1)))
    ts = np.power(10.0, rng.uniform(-2.0, 2.0, t_samples))
    result = reconstruction_grid(antinorm, xs, ts)
    logger.info(
        "round trip on %dx%d grid (seed %d): sup error %.3e%s",
        x_samples, t_samples, seed, result.sup_error, " [caveat]" if result.caveat else "",
    )
    return result


def _probe_indices(n_max: int) -> list[int]:
    ns, n = [], 1
    while n < n_max:
        ns.append(n)
        n *= 10
    ns.append(n_max)
    return ns


def _max_slope(family: AlphaNormFamily, a: float, b: float, pieces: int = 32) -> float:
    """Largest secant slope of Q over a partition of [a, b], a numerical bound on |Q′|."""
    grid = np.linspace(min(a, b), max(a, b), pieces + 1)
    q = np.array([family.scale(float(v)) for v in grid])
    return float(np.max(np.abs(np.diff(q)) / np.diff(grid)))


def _decays(errors: list[float], ns: list[int], power: int) -> bool:
    """The last schedule step shrinks the error at the rate a finite |Q′| allows."""
    if len(errors) < 2:
        return True
    if errors[-2] == 0.0:
        return errors[-1] == 0.0
    expected = (ns[-2] / ns[-1]) ** power
    limit = min(CONTINUITY_DECAY_CAP, CONTINUITY_DECAY_SLACK * expected)
    return errors[-1] <= limit * errors[-2]


def alpha_continuity_probe(
    family: AlphaNormFamily,
    x,
    alpha: float,
    n_max: int,
    schedule: str = "harmonic",
) -> ContinuityReport:
    """|‖x‖*_{α_n} - ‖x‖*_α| along α_n = α ∓ α(1 - α)/n^k from below and above.

    k = 1 for the harmonic schedule and k = 2 for the quadratic one. A side
    passes when its errors shrink monotonically and the last step shrinks
    them at the schedule's rate; the quadratic schedule must also end within
    1e-6. A jump of Q at α keeps the error flat and fails both.
    """
    alpha = check_alpha(alpha)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if schedule not in CONTINUITY_SCHEDULES:
        raise ValueError(f"unknown schedule {schedule!r}, expected one of {sorted(CONTINUITY_SCHEDULES)}")
    power = CONTINUITY_SCHEDULES[schedule]
    ns = _probe_indices(n_max)
    base = family.source.space.norm(x)
    profile = family.source.profile
    trivial = isinstance(profile, StepProfile)
    witness_u = None if trivial else profile.strictness_witness()
    target = family.norm_of_base(base, alpha)

    traces = []
    for side, sign in (("below", -1.0), ("above", 1.0)):
        alphas = [alpha + sign * alpha * (1.0 - alpha) / float(n) ** power for n in ns]
        errors = [abs(family.norm_of_base(base, a) - target) for a in alphas]
        monotone = all(later <= earlier + 1e-12 for earlier, later in zip(errors, errors[1:]))
        bound = 0.0 if trivial or base == 0.0 else _max_slope(family, alphas[-1], alpha) * abs(alphas[-1] - alpha) * base
        traces.append(ContinuityTrace(
            side=side, ns=ns, alphas=alphas, errors=errors, mean_value_bound=bound,
            monotone=monotone, decays=_decays(errors, ns, power),
        ))

    passed = all(tr.monotone and tr.decays for tr in traces)
    if schedule == "quadratic":
        passed = passed and all(tr.error_at_n_max <= CONTINUITY_ATOL for tr in traces)
    if witness_u is not None:
        logger.info("α-continuity at α=%s on a non-strict profile (witness u=%s)", alpha, witness_u)
    logger.info(
        "α-continuity at α=%s (%s, n_max=%d): errors %s, passed=%s",
        alpha, schedule, n_max, [tr.error_at_n_max for tr in traces], passed,
    )
    return ContinuityReport(
        alpha=alpha, schedule=schedule, n_max=n_max, traces=traces, trivial=trivial,
        strictness_witness=witness_u, passed=passed,
    )


def extract_from_reconstruction(family: AlphaNormFamily, x, alpha: float) -> float:
    """‖x‖′_α = ∧{t > 0 : ν′(x, t) <= 1 - α} with ν′ from `reconstruct`."""
    level = 1.0 - check_alpha(alpha)
    norm = family.source.space.norm(x)
    if norm == 0.0:
        return 0.0
    return first_true_above_zero(lambda t: reconstruct(family, x, t) <= level, start=norm)


def family_round_trip(
    family: AlphaNormFamily,
    x_samples: int,
    seed: int,
    alpha_range: tuple[float, float] = (0.05, 0.95),
    max_norm: float = 10.0,
) -> FamilyRoundTripReport:
    """sup |‖x‖′_α - ‖x‖*_α| over sampled (x, α); the first sample is θ."""
    rng = np.random.default_rng(seed)
    n = family.source.dimension
    directions = rng.standard_normal((x_samples, n))
    directions /= family.source.space.norms(directions)[:, None]
    radii = rng.uniform(0.0, max_norm, x_samples)
    radii[0] = 0.0
    xs = directions * radii[:, None]
    alphas = rng.uniform(alpha_range[0], alpha_range[1], x_samples)

    sup_error, worst = 0.0, {}
    for x, a in zip(xs, alphas.tolist()):
        original = family.norm(x, a)
        extracted = extract_from_reconstruction(family, x, a)
        error = abs(extracted - original)
        if error > sup_error or not worst:
            sup_error = max(sup_error, error)
            worst = {"x": x.tolist(), "alpha": a, "extracted": extracted, "original": original}
    passed = sup_error <= ROUND_TRIP_ATOL
    logger.info("family round trip over %d samples (seed %d): sup error %.3e", x_samples, seed, sup_error)
    return FamilyRoundTripReport(samples=x_samples, seed=seed, sup_error=sup_error, worst=worst, passed=passed)


def boundary_radius(antinorm: FuzzyAntiNorm, direction, alpha: float) -> float:
    """sup{r > 0 : ν(r·d, 1) <= 1 - α} for a direction d of unit base norm."""
    level = 1.0 - check_alpha(alpha)
    scale = antinorm.space.norm(direction)
    return first_true_above_zero(lambda r: antinorm.evaluate_scaled(r * scale, 1.0) > level)


def unit_directions(antinorm: FuzzyAntiNorm, rng: np.random.Generator, count: int) -> np.ndarray:
    directions = rng.standard_normal((count, antinorm.dimension))
    norms = antinorm.space.norms(directions)
    # a Gaussian row is never exactly θ in practice; guard anyway
    directions[norms == 0.0, 0] = 1.0
    return directions / antinorm.space.norms(directions)[:, None]


def unit_anti_ball_identity(antinorm: FuzzyAntiNorm, alpha: float, samples: int, seed: int) -> AntiBallReport:
    """{x : ν(x, 1) <= 1 - α} against {x : ‖x‖*_α <= 1} on sampled x, plus a bounding radius."""
    alpha = check_alpha(alpha)
    witness_u = None if antinorm.is_strict else antinorm.profile.strictness_witness()
    if witness_u is not None:
        logger.info("unit anti-ball at α=%s on a non-strict profile (witness u=%s)", alpha, witness_u)
    family = family_of(antinorm)
    q = family.scale(alpha)
    expected = math.inf if q == 0.0 else 1.0 / q
    rng = np.random.default_rng(seed)

    directions = unit_directions(antinorm, rng, samples)
    span = 2.0 * expected if math.isfinite(expected) else 1.0
    xs = directions * rng.uniform(0.0, span, (samples, 1))
    xs[0] = 0.0

    in_fuzzy = antinorm.evaluate_batch(xs, 1.0) <= 1.0 - alpha
    alpha_norms = family.norms(xs, alpha)
    in_crisp = alpha_norms <= 1.0
    band = np.abs(alpha_norms - 1.0) <= BOUNDARY_BAND
    disagree = (in_fuzzy != in_crisp) & ~band

    radii = [boundary_radius(antinorm, d, alpha) for d in directions[:RADIUS_DIRECTIONS]]
    bounding = float(max(radii))
    witness: dict = {}
    if np.any(disagree):
        i = int(np.argmax(disagree))
        witness = {"x": xs[i].tolist(), "nu_x_1": float(antinorm.evaluate(xs[i], 1.0)), "alpha_norm": float(alpha_norms[i])}
        logger.warning("unit anti-ball identity broken at %s", witness)
    passed = not np.any(disagree) and abs(bounding - expected) <= RADIUS_ATOL

    return AntiBallReport(
        alpha=alpha,
        samples=samples,
        agreements=int(np.sum(in_fuzzy == in_crisp)),
        band_points=int(np.sum(band)),
        disagreements=int(np.sum(disagree)),
        bounding_radius=bounding,
        expected_radius=expected,
        witness=witness,
        strictness_witness=witness_u,
        passed=bool(passed),
    )
