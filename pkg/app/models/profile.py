"""Decay profiles f: (0, ∞) → [0, 1] realising ν(x, t) = f(t / ‖x‖).

Every profile exposes the same small surface: `value(u)` (vectorised),
`scale(alpha)` (closed-form Q(α) = inf{u > 0 : f(u) <= 1 - α} or None when
only bisection is available) and the flags the axiom checker needs.
"""
import math
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class _Profile(BaseModel):
    model_config = ConfigDict(frozen=True)

    @property
    def is_continuous(self) -> bool:
        return True

    @property
    def is_monotone(self) -> bool:
        return True

    @property
    def is_strict(self) -> bool:
        """Strictness condition: continuous, strictly decreasing where 0 < f < 1."""
        return True

    def strictness_witness(self) -> Optional[float]:
        """A point u where the strictness condition breaks, or None."""
        return None

    def scale(self, alpha: float) -> Optional[float]:
        return None


class ReciprocalProfile(_Profile):
    """f(u) = 1 / (1 + u/k), i.e. ν(x, t) = k‖x‖ / (t + k‖x‖)."""
    kind: Literal["reciprocal"] = "reciprocal"
    k: float = Field(..., gt=0, allow_inf_nan=False)

    def value(self, u):
        u = np.asarray(u, dtype=float)
        return self.k / (self.k + u)

    def scale(self, alpha: float) -> float:
        return self.k * alpha / (1.0 - alpha)


class StepProfile(_Profile):
    """f(u) = 1 for u <= 1, else 0: ν(x, t) = 1 iff t <= ‖x‖."""
    kind: Literal["step"] = "step"

    def value(self, u):
        u = np.asarray(u, dtype=float)
        return np.where(u <= 1.0, 1.0, 0.0)

    def scale(self, alpha: float) -> float:
        return 1.0

    @property
    def is_continuous(self) -> bool:
        return False

    @property
    def is_strict(self) -> bool:
        return False

    def strictness_witness(self) -> float:
        return 1.0


class ExponentialProfile(_Profile):
    """f(u) = exp(-λu)."""
    kind: Literal["exponential"] = "exponential"
    rate: float = Field(..., gt=0, allow_inf_nan=False)

    def value(self, u):
        u = np.asarray(u, dtype=float)
        return np.exp(-self.rate * u)

    def scale(self, alpha: float) -> float:
        return -math.log1p(-alpha) / self.rate


class TabulatedProfile(_Profile):
    """Piecewise-linear profile through knots (u, f).

    Left of the first knot the value is 1, right of the last knot it is 0.
    Tables that increase somewhere are accepted so the axiom checker can
    report them; they are flagged through `is_monotone`.
    """
    kind: Literal["tabulated"] = "tabulated"
    points: tuple[tuple[float, float], ...] = Field(..., min_length=1)

    @field_validator("points")
    @classmethod
    def _check_points(cls, points):
        previous = 0.0
        for i, (u, f) in enumerate(points):
            if not math.isfinite(u) or u <= previous:
                raise ValueError(f"knot {i}: u must be positive, finite and strictly increasing, got {u!r}")
            if not 0.0 <= f <= 1.0:
                raise ValueError(f"knot {i}: f must lie in [0, 1], got {f!r}")
            previous = u
        return points

    @property
    def knots(self) -> np.ndarray:
        return np.array([u for u, _ in self.points])

    @property
    def levels(self) -> np.ndarray:
        return np.array([f for _, f in self.points])

    def value(self, u):
        u = np.asarray(u, dtype=float)
        knots, levels = self.knots, self.levels
        inner = np.interp(u, knots, levels)
        return np.where(u < knots[0], 1.0, np.where(u > knots[-1], 0.0, inner))

    @property
    def is_continuous(self) -> bool:
        levels = self.levels
        return bool(levels[0] == 1.0 and levels[-1] == 0.0)

    @property
    def is_monotone(self) -> bool:
        return bool(np.all(np.diff(self.levels) <= 0.0))

    def monotonicity_witness(self) -> Optional[tuple[float, float]]:
        """Two knots u1 < u2 with f(u1) < f(u2), or None."""
        levels = self.levels
        for i in range(len(levels) - 1):
            if levels[i + 1] > levels[i]:
                return float(self.knots[i]), float(self.knots[i + 1])
        return None

    def strictness_witness(self) -> Optional[float]:
        knots, levels = self.knots, self.levels
        if levels[0] != 1.0:
            return float(knots[0])
        if levels[-1] != 0.0:
            return float(knots[-1])
        for i in range(len(levels) - 1):
            a, b = levels[i], levels[i + 1]
            if b > a or (a == b and 0.0 < a < 1.0):
                return float(knots[i])
        return None

    @property
    def is_strict(self) -> bool:
        return self.strictness_witness() is None


DecayProfile = Annotated[
    Union[ReciprocalProfile, StepProfile, ExponentialProfile, TabulatedProfile],
    Field(discriminator="kind"),
]
