"""Convergence diagnostics for sequences in a fuzzy anti-normed space.

Generator sequences x_n = base + c(n)·v have closed-form limits, so their
verdicts are analytic; the reported tail window is evidence found by
doubling from the horizon. Explicit lists only have a last window, which is
read with a trend heuristic and may honestly end up inconclusive.

Convergence uses a strict threshold (< 1 - α), Cauchy a non-strict one
(<= 1 - α); both with the CONVERGENCE_MARGIN numerical margin.
"""
import logging
from typing import Callable, Optional, Sequence

import numpy as np

from app.config import config
from app.core.tolerances import (
    ALPHA_NORM_ZERO_TOL,
    CONVERGENCE_MARGIN,
    SUPREMUM_PROBES,
    UNIQUENESS_ATOL,
    VANISHING_ATOL,
    WINDOW_SEARCH_LIMIT,
)
from app.errors.antinorm_errors import DimensionMismatch, SpaceMismatch
from app.errors.sequence_errors import InsufficientData, MissingCandidateLimit
from app.models.alpha_family import AlphaNormFamily, check_alpha
from app.models.antinorm import FuzzyAntiNorm
from app.models.sequence import ExplicitSequence, GeneratorSequence
from app.schemas.report import (
    CompletenessDiagnostic,
    ConvergenceVerdict,
    EquivalenceReport,
    EquivalenceRow,
    ImplicationCheck,
    ImplicationReport,
    Verdict,
)

logger = logging.getLogger(__name__)

# builds the difference vectors of a window: (first n, last n) -> rows, plus the matching n and lag p
WindowDiffs = Callable[[int, int], tuple[np.ndarray, np.ndarray, np.ndarray]]


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _grid(t_grid: Optional[Sequence[float]]) -> list[float]:
    grid = list(config.DEFAULT_T_GRID if t_grid is None else t_grid)
    if not grid or any(not t > 0.0 for t in grid):
        raise ValueError(f"t_grid must be a non-empty list of positive times, got {grid}")
    return [float(t) for t in grid]


def _tail(tail: Optional[int]) -> int:
    tail = config.DEFAULT_TAIL if tail is None else int(tail)
    if tail < 1:
        raise ValueError(f"tail must be positive, got {tail}")
    return tail


def _p_max(p_max: Optional[int]) -> int:
    p_max = config.DEFAULT_P_MAX if p_max is None else int(p_max)
    if p_max < 1:
        raise ValueError(f"p_max must be positive, got {p_max}")
    return p_max


def _candidate(antinorm_dimension: int, sequence) -> np.ndarray:
    if sequence.candidate_limit is None:
        raise MissingCandidateLimit("a convergence check needs a candidate limit")
    if sequence.dimension != antinorm_dimension:
        raise DimensionMismatch(
            f"sequence has dimension {sequence.dimension}, the space has {antinorm_dimension}"
        )
    return np.asarray(sequence.candidate_limit, dtype=float)


def _offset_diffs(sequence, limit: np.ndarray) -> WindowDiffs:
    def diffs(first: int, last: int):
        ns = np.arange(first, last + 1)
        return sequence.window(first, last + 1) - limit[None, :], ns, np.zeros_like(ns)
    return diffs


def _lag_diffs(sequence, p_max: int) -> WindowDiffs:
    """x_n - x_{n+p} for n in [first, last] and p = 1..p_max, flattened n-major."""
    def diffs(first: int, last: int):
        terms = sequence.window(first, last + p_max + 1)
        count = last - first + 1
        rows = [terms[:count] - terms[p:p + count] for p in range(1, p_max + 1)]
        stacked = np.stack(rows, axis=1).reshape(count * p_max, -1)
        ns = np.repeat(np.arange(first, last + 1), p_max)
        ps = np.tile(np.arange(1, p_max + 1), count)
        return stacked, ns, ps
    return diffs


def _memberships(antinorm: FuzzyAntiNorm, rows: np.ndarray, grid: list[float]) -> np.ndarray:
    """ν(row, t) for every t in the grid: shape (len(grid), len(rows))."""
    return np.stack([antinorm.evaluate_batch(rows, t) for t in grid])


def _passes(values: np.ndarray, threshold: float, strict: bool) -> np.ndarray:
    if strict:
        return values < threshold - CONVERGENCE_MARGIN
    return values <= threshold + CONVERGENCE_MARGIN


def _window_verdict(
    check: str,
    values: np.ndarray,
    ns: np.ndarray,
    ps: np.ndarray,
    threshold: float,
    strict: bool,
    good: Verdict,
    grid: list[float],
    alpha: Optional[float],
    source: str,
) -> ConvergenceVerdict:
    """Read a (len(grid), rows) block of tail values: last-window maximum plus a trend check.

    Rows must be ordered by n. The late half failing without a downward trend
    is a failure; everything else that does not pass cleanly is inconclusive.
    """
    estimates = values.max(axis=1)
    half = values.shape[1] // 2
    early = values[:, :half].max(axis=1) if half else estimates
    late = values[:, half:].max(axis=1)

    stuck = (late > threshold + CONVERGENCE_MARGIN) & (late >= early - CONVERGENCE_MARGIN)
    window = (int(ns[0]), int(ns[-1]))
    common = dict(
        check=check, alpha=alpha, threshold=threshold, t_grid=grid, tail_window=window,
        estimates=estimates.tolist(), worst_tail_membership=estimates.tolist(), source=source,
    )
    if np.any(stuck):
        k = int(np.argmax(np.where(stuck, late, -np.inf)))
        j = half + int(np.argmax(values[k, half:]))
        witness = {"n": int(ns[j]), "value": float(values[k, j])}
        if grid:
            witness["t"] = grid[k]
        if np.any(ps):
            witness["p"] = int(ps[j])
        logger.warning("%s fails on the window %s with witness %s", check, window, witness)
        return ConvergenceVerdict(verdict=Verdict.FAILS, witness=witness, **common)
    if np.all(_passes(estimates, threshold, strict)):
        if np.any(late > early + CONVERGENCE_MARGIN):
            return ConvergenceVerdict(
                verdict=Verdict.INCONCLUSIVE, note="values still increasing across the window", **common
            )
        return ConvergenceVerdict(verdict=good, **common)
    return ConvergenceVerdict(
        verdict=Verdict.INCONCLUSIVE, note="tail values straddle the threshold or are still decreasing", **common
    )


def _explicit_verdict(check, rows_for: WindowDiffs, length: int, tail: int, extra: int, evaluate,
                      threshold, strict, good, grid, alpha) -> ConvergenceVerdict:
    if tail + extra > length:
        raise InsufficientData(f"{check} needs at least {tail + extra} terms, the sequence has {length}")
    rows, ns, ps = rows_for(length - extra - tail + 1, length - extra)
    return _window_verdict(check, evaluate(rows), ns, ps, threshold, strict, good, grid, alpha, "window")


def _search_window(rows_for: WindowDiffs, evaluate, horizon: int, tail: int, threshold: float, strict: bool):
    """Double the window end from the horizon until every value passes.

    Returns (values, ns, ps) of the first passing window, or None past WINDOW_SEARCH_LIMIT.
    """
    end = horizon
    while end <= WINDOW_SEARCH_LIMIT:
        start = max(1, end - tail + 1)
        rows, ns, ps = rows_for(start, end)
        values = evaluate(rows)
        if np.all(_passes(values, threshold, strict)):
            logger.debug("tail window found at [%d, %d]", start, end)
            return values, ns, ps
        end *= 2
    return None


# ---------------------------------------------------------------------------
# Membership-based checks
# ---------------------------------------------------------------------------

def _membership_convergence(
    check: str,
    antinorm: FuzzyAntiNorm,
    sequence,
    threshold: float,
    grid: list[float],
    tail: int,
    alpha: Optional[float],
    fallback_time: Callable[[float], float],
) -> ConvergenceVerdict:
    limit = _candidate(antinorm.dimension, sequence)
    evaluate = lambda rows: _memberships(antinorm, rows, grid)  # noqa: E731
    rows_for = _offset_diffs(sequence, limit)

    if isinstance(sequence, ExplicitSequence):
        return _explicit_verdict(check, rows_for, sequence.length, tail, 0, evaluate,
                                 threshold, True, Verdict.CONVERGES, grid, alpha)

    offset = sequence.limit() - limit
    if np.any(offset != 0.0):
        start = max(1, sequence.horizon - tail + 1)
        rows, ns, _ = rows_for(start, sequence.horizon)
        values = evaluate(rows)
        at_limit = np.array([antinorm.evaluate(offset, t) for t in grid])
        over = [i for i, v in enumerate(at_limit) if v >= threshold]
        t_w = grid[over[-1]] if over else fallback_time(antinorm.space.norm(offset))
        witness = {
            "t": t_w,
            "n": sequence.horizon,
            "membership": antinorm.evaluate(rows[-1], t_w),
            "limit_membership": antinorm.evaluate(offset, t_w),
        }
        logger.info("%s fails: the sequence tends to candidate + %s, witness %s", check, offset.tolist(), witness)
        estimates = values.max(axis=1).tolist()
        return ConvergenceVerdict(
            check=check, verdict=Verdict.FAILS, alpha=alpha, threshold=threshold, t_grid=grid,
            tail_window=(int(ns[0]), int(ns[-1])), estimates=estimates, worst_tail_membership=estimates,
            source="closed_form", witness=witness,
        )

    found = _search_window(rows_for, evaluate, sequence.horizon, tail, threshold, strict=True)
    if found is None:
        return ConvergenceVerdict(
            check=check, verdict=Verdict.INCONCLUSIVE, alpha=alpha, threshold=threshold, t_grid=grid,
            source="closed_form", note=f"no passing tail window below n = {WINDOW_SEARCH_LIMIT}",
        )
    values, ns, _ = found
    estimates = values.max(axis=1).tolist()
    return ConvergenceVerdict(
        check=check, verdict=Verdict.CONVERGES, alpha=alpha, threshold=threshold, t_grid=grid,
        tail_window=(int(ns[0]), int(ns[-1])), estimates=estimates, worst_tail_membership=estimates,
        source="closed_form",
    )


def fuzzy_alpha_converges(
    antinorm: FuzzyAntiNorm,
    sequence,
    alpha: float,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
) -> ConvergenceVerdict:
    """lim ν(x_n - x, t) < 1 - α at every grid t, x the candidate limit."""
    alpha = check_alpha(alpha)
    q = AlphaNormFamily.from_antinorm(antinorm).scale(alpha)
    return _membership_convergence(
        "fuzzy_alpha_convergence", antinorm, sequence, 1.0 - alpha, _grid(t_grid), _tail(tail), alpha,
        # ν(z, t) > 1 - α for every t below ‖z‖*_α
        lambda norm: 0.5 * q * norm,
    )


def fuzzy_converges(
    antinorm: FuzzyAntiNorm,
    sequence,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
) -> ConvergenceVerdict:
    """lim ν(x_n - x, t) = 0 at every grid t (memberships below VANISHING_ATOL)."""
    return _membership_convergence(
        "fuzzy_convergence", antinorm, sequence, VANISHING_ATOL, _grid(t_grid), _tail(tail), None,
        lambda norm: norm * SUPREMUM_PROBES[0],
    )


def fuzzy_alpha_cauchy(
    antinorm: FuzzyAntiNorm,
    sequence,
    alpha: float,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
    p_max: Optional[int] = None,
) -> ConvergenceVerdict:
    """lim_n max_{p <= p_max} ν(x_n - x_{n+p}, t) <= 1 - α at every grid t."""
    alpha = check_alpha(alpha)
    grid, tail, p_max = _grid(t_grid), _tail(tail), _p_max(p_max)
    if sequence.dimension != antinorm.dimension:
        raise DimensionMismatch(f"sequence has dimension {sequence.dimension}, the space has {antinorm.dimension}")
    threshold = 1.0 - alpha
    rows_for = _lag_diffs(sequence, p_max)
    evaluate = lambda rows: _memberships(antinorm, rows, grid)  # noqa: E731

    if isinstance(sequence, ExplicitSequence):
        return _explicit_verdict("fuzzy_alpha_cauchy", rows_for, sequence.length, tail, p_max, evaluate,
                                 threshold, False, Verdict.CAUCHY, grid, alpha)
    return _generator_cauchy("fuzzy_alpha_cauchy", sequence, rows_for, evaluate, tail, threshold, grid, alpha)


def _generator_cauchy(check, sequence: GeneratorSequence, rows_for, evaluate, tail, threshold, grid, alpha):
    # every generator has a limit in R^n, so it is Cauchy; the window is evidence
    found = _search_window(rows_for, evaluate, sequence.horizon, tail, threshold, strict=False)
    if found is None:
        return ConvergenceVerdict(
            check=check, verdict=Verdict.INCONCLUSIVE, alpha=alpha, threshold=threshold, t_grid=grid,
            source="closed_form", note=f"no passing tail window below n = {WINDOW_SEARCH_LIMIT}",
        )
    values, ns, _ = found
    estimates = values.max(axis=1).tolist()
    return ConvergenceVerdict(
        check=check, verdict=Verdict.CAUCHY, alpha=alpha, threshold=threshold, t_grid=grid,
        tail_window=(int(ns[0]), int(ns[-1])), estimates=estimates, worst_tail_membership=estimates,
        source="closed_form",
    )


# ---------------------------------------------------------------------------
# α-norm checks
# ---------------------------------------------------------------------------

def _generator_norm_bound(family: AlphaNormFamily, sequence: GeneratorSequence, alpha: float, tail: int):
    """First window [start, end] (end doubling from the horizon) with Q(α)·c(start)·‖v‖ <= tol.

    c is non-increasing for every rate rule, so the bound covers all n >= start
    and every lag p. Returns (start, end, bound) or None.
    """
    q = family.scale(alpha)
    speed = q * family.source.space.norm(sequence.direction)
    end = sequence.horizon
    while end <= WINDOW_SEARCH_LIMIT:
        start = max(1, end - tail + 1)
        decaying = 0.0 if sequence.limit_coefficient else float(sequence.coefficients([start])[0])
        bound = speed * decaying
        if bound <= ALPHA_NORM_ZERO_TOL:
            return start, end, bound
        end *= 2
    return None


def _norm_verdict(check, family, sequence, alpha, tail, rows_for, extra, good) -> ConvergenceVerdict:
    evaluate = lambda rows: family.norms(rows, alpha)[None, :]  # noqa: E731
    if isinstance(sequence, ExplicitSequence):
        return _explicit_verdict(check, rows_for, sequence.length, tail, extra, evaluate,
                                 ALPHA_NORM_ZERO_TOL, False, good, [], alpha)

    found = _generator_norm_bound(family, sequence, alpha, tail)
    if found is None:
        return ConvergenceVerdict(
            check=check, verdict=Verdict.INCONCLUSIVE, alpha=alpha, threshold=ALPHA_NORM_ZERO_TOL,
            source="closed_form", note=f"tail bound still above tolerance at n = {WINDOW_SEARCH_LIMIT}",
        )
    start, end, bound = found
    return ConvergenceVerdict(
        check=check, verdict=good, alpha=alpha, threshold=ALPHA_NORM_ZERO_TOL, tail_window=(start, end),
        estimates=[bound], worst_tail_membership=[], source="closed_form",
    )


def alpha_norm_converges(
    family: AlphaNormFamily,
    sequence,
    alpha: float,
    tail: Optional[int] = None,
) -> ConvergenceVerdict:
    """‖x_n - x‖*_α → 0, read against ALPHA_NORM_ZERO_TOL."""
    alpha = check_alpha(alpha)
    tail = _tail(tail)
    limit = _candidate(family.source.dimension, sequence)
    check = "alpha_norm_convergence"

    if isinstance(sequence, GeneratorSequence):
        offset = sequence.limit() - limit
        if np.any(offset != 0.0):
            value = family.norm(offset, alpha)
            logger.info("%s fails: ‖lim x_n - x‖*_α = %g", check, value)
            return ConvergenceVerdict(
                check=check, verdict=Verdict.FAILS, alpha=alpha, threshold=ALPHA_NORM_ZERO_TOL,
                estimates=[value], source="closed_form",
                witness={"n": sequence.horizon, "limit_alpha_norm": value},
            )
    return _norm_verdict(check, family, sequence, alpha, tail, _offset_diffs(sequence, limit), 0, Verdict.CONVERGES)


def alpha_norm_cauchy(
    family: AlphaNormFamily,
    sequence,
    alpha: float,
    tail: Optional[int] = None,
    p_max: Optional[int] = None,
) -> ConvergenceVerdict:
    """max_{p <= p_max} ‖x_n - x_{n+p}‖*_α → 0 (the classical Cauchy test in one α-norm)."""
    alpha = check_alpha(alpha)
    tail, p_max = _tail(tail), _p_max(p_max)
    if sequence.dimension != family.source.dimension:
        raise DimensionMismatch(
            f"sequence has dimension {sequence.dimension}, the space has {family.source.dimension}"
        )
    return _norm_verdict("alpha_norm_cauchy", family, sequence, alpha, tail,
                         _lag_diffs(sequence, p_max), p_max, Verdict.CAUCHY)


# ---------------------------------------------------------------------------
# Implications between the notions
# ---------------------------------------------------------------------------

def equivalence_check(
    antinorm: FuzzyAntiNorm,
    family: AlphaNormFamily,
    sequence,
    alpha_set: Sequence[float],
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
) -> EquivalenceReport:
    """Fuzzy α-anti-convergence and α-norm convergence must agree for every α."""
    if family.source != antinorm:
        raise SpaceMismatch("the α-norm family is not derived from this anti-norm")
    rows = []
    for alpha in sorted(alpha_set):
        fuzzy = fuzzy_alpha_converges(antinorm, sequence, alpha, t_grid, tail)
        crisp = alpha_norm_converges(family, sequence, alpha, tail)
        row = EquivalenceRow(alpha=alpha, fuzzy=fuzzy, alpha_norm=crisp)
        if not row.agree:
            logger.warning("α=%s: fuzzy verdict %s, α-norm verdict %s", alpha, fuzzy.verdict.value, crisp.verdict.value)
        rows.append(row)
    return EquivalenceReport(rows=rows)


def default_second_limit(sequence) -> np.ndarray:
    """A point distinct from the candidate limit: candidate + direction, else candidate + e_1."""
    limit = np.asarray(sequence.candidate_limit, dtype=float)
    if isinstance(sequence, GeneratorSequence) and np.any(np.asarray(sequence.direction) != 0.0):
        return limit + np.asarray(sequence.direction, dtype=float)
    shift = np.zeros_like(limit)
    shift[0] = 1.0
    return limit + shift


def implication_suite(
    antinorm: FuzzyAntiNorm,
    sequence,
    alpha: float,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
    p_max: Optional[int] = None,
    second_limit=None,
) -> ImplicationReport:
    """convergent ⇒ Cauchy, α-norm Cauchy ⇒ fuzzy α-anti-Cauchy, and uniqueness of limits."""
    alpha = check_alpha(alpha)
    family = AlphaNormFamily.from_antinorm(antinorm)
    _candidate(antinorm.dimension, sequence)

    converges = fuzzy_alpha_converges(antinorm, sequence, alpha, t_grid, tail)
    cauchy = fuzzy_alpha_cauchy(antinorm, sequence, alpha, t_grid, tail, p_max)
    crisp_cauchy = alpha_norm_cauchy(family, sequence, alpha, tail, p_max)

    first = np.asarray(sequence.candidate_limit, dtype=float)
    second = default_second_limit(sequence) if second_limit is None else antinorm.space.coerce(second_limit)
    other = sequence.model_copy(update={"candidate_limit": tuple(second.tolist())})
    other_converges = fuzzy_alpha_converges(antinorm, other, alpha, t_grid, tail)
    separation = antinorm.space.norm(first - second)

    checks = [
        ImplicationCheck(
            name="convergent_implies_cauchy",
            premise=converges.verdict is Verdict.CONVERGES,
            conclusion=cauchy.verdict is Verdict.CAUCHY,
            detail={"convergence": converges.verdict.value, "cauchy": cauchy.verdict.value},
        ),
        ImplicationCheck(
            name="alpha_norm_cauchy_implies_fuzzy_cauchy",
            premise=crisp_cauchy.verdict is Verdict.CAUCHY,
            conclusion=cauchy.verdict is Verdict.CAUCHY,
            detail={"alpha_norm_cauchy": crisp_cauchy.verdict.value, "fuzzy_cauchy": cauchy.verdict.value},
        ),
        ImplicationCheck(
            name="limit_uniqueness",
            premise=converges.verdict is Verdict.CONVERGES and other_converges.verdict is Verdict.CONVERGES,
            conclusion=separation <= UNIQUENESS_ATOL,
            detail={
                "first_limit": first.tolist(),
                "second_limit": second.tolist(),
                "second_limit_verdict": other_converges.verdict.value,
                "separation": separation,
            },
        ),
    ]
    report = ImplicationReport(alpha=alpha, checks=checks)
    for c in report.checks:
        if not c.holds:
            logger.warning("implication %s broken at α=%s: %s", c.name, alpha, c.detail)
    return report


def completeness_diagnostic(
    antinorm: FuzzyAntiNorm,
    sequence,
    alpha: float,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
    p_max: Optional[int] = None,
) -> CompletenessDiagnostic:
    """Finite-data consistency with completeness; never a proof of it.

    An α-norm Cauchy sequence must be fuzzy α-anti-Cauchy and, when its
    candidate limit is right, fuzzy α-anti-convergent.
    """
    alpha = check_alpha(alpha)
    family = AlphaNormFamily.from_antinorm(antinorm)
    crisp = alpha_norm_cauchy(family, sequence, alpha, tail, p_max).verdict
    fuzzy = fuzzy_alpha_cauchy(antinorm, sequence, alpha, t_grid, tail, p_max).verdict
    if sequence.candidate_limit is None:
        converges = Verdict.INCONCLUSIVE
    else:
        converges = fuzzy_alpha_converges(antinorm, sequence, alpha, t_grid, tail).verdict

    if crisp is not Verdict.CAUCHY:
        status = "inconclusive"
    elif fuzzy is Verdict.FAILS or converges is Verdict.FAILS:
        status = "inconsistent"
    elif fuzzy is Verdict.CAUCHY and converges is Verdict.CONVERGES:
        status = "consistent"
    else:
        status = "inconclusive"
    return CompletenessDiagnostic(
        alpha=alpha,
        alpha_norm_cauchy=crisp,
        fuzzy_cauchy=fuzzy,
        fuzzy_convergence=converges,
        status=status,
        note="finite data can only be consistent with completeness; it cannot establish it",
    )


def membership_trace(
    antinorm: FuzzyAntiNorm,
    sequence,
    t_grid: Optional[Sequence[float]] = None,
    tail: Optional[int] = None,
) -> list[tuple[int, float, float]]:
    """(n, t, ν(x_n - x, t)) over the last `tail` terms (generators: up to the horizon)."""
    grid, tail = _grid(t_grid), _tail(tail)
    limit = _candidate(antinorm.dimension, sequence)
    end = sequence.length if isinstance(sequence, ExplicitSequence) else sequence.horizon
    start = max(1, end - tail + 1)
    rows, ns, _ = _offset_diffs(sequence, limit)(start, end)
    values = _memberships(antinorm, rows, grid)
    return [(int(n), t, float(values[k, j])) for j, n in enumerate(ns) for k, t in enumerate(grid)]
