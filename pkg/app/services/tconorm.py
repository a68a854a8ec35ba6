"""t-conorm operations and the numerical existence searches built on them."""
import logging

from app.errors.tconorm_errors import InvalidUnitValue, NoDominatedOperand
from app.models.tconorm import TConorm, unit_value
from app.utils.bisection import bisect_boundary

logger = logging.getLogger(__name__)


def apply(conorm: TConorm, a: float, b: float) -> float:
    return conorm(a, b)


def _open_unit(name: str, value: float) -> float:
    v = unit_value(value)
    if not 0.0 < v < 1.0:
        raise InvalidUnitValue(f"{name} must lie in the open interval (0, 1), got {value!r}")
    return v


def find_idempotent_bound(conorm: TConorm, r4: float) -> float:
    """Largest r5 (to the last bit) with r5 ⋄ r5 <= r4.

    r ↦ r ⋄ r is monotone with 0 ⋄ 0 = 0 and 1 ⋄ 1 = 1, so the switch to
    "r ⋄ r > r4" is bracketed on [0, 1].
    """
    r4 = _open_unit("r4", r4)
    lo, _ = bisect_boundary(lambda r: float(conorm.rule(r, r)) > r4, 0.0, 1.0, rtol=0.0)
    if not 0.0 < lo < 1.0 or not float(conorm.rule(lo, lo)) <= r4:
        raise NoDominatedOperand(f"no r5 in (0, 1) with r5 ⋄ r5 <= {r4} for {conorm.kind.value}")
    logger.debug("idempotent bound for %s at r4=%s: r5=%r", conorm.kind.value, r4, lo)
    return lo


def find_dominated_operand(conorm: TConorm, r1: float, r2: float) -> float:
    """Largest r (to the last bit) with r1 > r ⋄ r2, searched from below."""
    r1 = _open_unit("r1", r1)
    r2 = _open_unit("r2", r2)
    if r1 <= r2:
        # r ⋄ r2 >= r2 >= r1 for every r
        raise NoDominatedOperand(f"r1={r1} must exceed r2={r2}")
    lo, _ = bisect_boundary(lambda r: float(conorm.rule(r, r2)) >= r1, 0.0, 1.0, rtol=0.0)
    if not 0.0 < lo < 1.0 or not r1 > float(conorm.rule(lo, r2)):
        raise NoDominatedOperand(f"no r in (0, 1) with {r1} > r ⋄ {r2} for {conorm.kind.value}")
    logger.debug("dominated operand for %s at (r1=%s, r2=%s): r=%r", conorm.kind.value, r1, r2, lo)
    return lo
