"""Bisection on monotone predicates.

All infima and suprema over a continuum in this package go through these
helpers: the predicate is monotone, so a bracket is certified at every step.
"""
import logging
import math
from typing import Callable

from app.core.tolerances import BISECTION_ATOL, BISECTION_MAX_ITER, BISECTION_RTOL, EXPANSION_LIMIT

logger = logging.getLogger(__name__)

Predicate = Callable[[float], bool]


def bisect_boundary(
    predicate: Predicate,
    lower: float,
    upper: float,
    rtol: float = BISECTION_RTOL,
    atol: float = 0.0,
    max_iter: int = BISECTION_MAX_ITER,
) -> tuple[float, float]:
    """Shrink [lower, upper] around the switch of a monotone predicate.

    Requires predicate(lower) False and predicate(upper) True (the predicate
    switches from False to True exactly once). Returns the final (lo, hi)
    bracket; hi always satisfies the predicate, lo never does.
    """
    lo, hi = lower, upper
    for _ in range(max_iter):
        if hi - lo <= max(atol, rtol * abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def first_true_above_zero(
    predicate: Predicate,
    start: float = 1.0,
    rtol: float = BISECTION_RTOL,
    max_iter: int = BISECTION_MAX_ITER,
) -> float:
    """inf{s > 0 : predicate(s)} for a predicate that is False near 0 and monotone.

    Returns math.inf when the predicate never holds below EXPANSION_LIMIT,
    and 0.0 when it holds for every positive s the search can reach.
    """
    hi = start
    if predicate(hi):
        lo = hi
        while predicate(lo):
            lo *= 0.5
            if lo < math.ldexp(1.0, -1000):
                return 0.0
        hi = 2.0 * lo
    else:
        lo = hi
        while not predicate(hi):
            lo = hi
            hi *= 2.0
            if hi > EXPANSION_LIMIT:
                logger.debug("no crossing below %g, returning +inf", EXPANSION_LIMIT)
                return math.inf
    _, hi = bisect_boundary(predicate, lo, hi, rtol=rtol, max_iter=max_iter)
    return hi


def last_true_in_unit_interval(
    predicate: Predicate,
    atol: float = BISECTION_ATOL,
    max_iter: int = BISECTION_MAX_ITER,
) -> float:
    """sup{a ∈ (0, 1) : predicate(a)} for a predicate that is True then False.

    Returns 0.0 when the predicate fails everywhere the search probes and
    1.0 when it holds up to within `atol` of 1.
    """
    lo, hi = 0.0, 1.0
    for _ in range(max_iter):
        if hi - lo <= atol:
            break
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    if lo >= 1.0 - atol:
        return 1.0
    if hi <= atol:
        return 0.0
    return lo
