import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.errors.alphacut_errors import InvalidAlpha
from app.models.antinorm import FuzzyAntiNorm
from app.utils.bisection import first_true_above_zero


def check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 < a < 1.0:
        raise InvalidAlpha(f"α must lie in the open interval (0, 1), got {alpha!r}")
    return a


class AlphaNormFamily(BaseModel):
    """The ascending family ‖x‖*_α = Q(α)·‖x‖_base extracted from a profile anti-norm.

    Q(α) = inf{u > 0 : f(u) <= 1 - α}; closed form for the built-in profiles,
    bisection on f for tabulated ones. Values may be +inf (extended reals).
    """
    source: FuzzyAntiNorm

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_antinorm(cls, antinorm: FuzzyAntiNorm) -> "AlphaNormFamily":
        return cls(source=antinorm)

    @property
    def has_closed_form(self) -> bool:
        return self.source.profile.scale(0.5) is not None

    def scale(self, alpha: float) -> float:
        alpha = check_alpha(alpha)
        closed = self.source.profile.scale(alpha)
        if closed is not None:
            return float(closed)
        return self.scale_by_bisection(alpha)

    def scale_by_bisection(self, alpha: float) -> float:
        level = 1.0 - check_alpha(alpha)
        profile = self.source.profile
        return first_true_above_zero(lambda u: float(profile.value(u)) <= level)

    def norm(self, x, alpha: float) -> float:
        return self.norm_of_base(self.source.space.norm(x), alpha)

    def norm_of_base(self, base_norm: float, alpha: float) -> float:
        if base_norm == 0.0:
            return 0.0
        q = self.scale(alpha)
        return math.inf if math.isinf(q) else q * base_norm

    def norms(self, xs, alpha: float) -> np.ndarray:
        base = self.source.space.norms(xs)
        q = self.scale(alpha)
        with np.errstate(invalid="ignore"):
            out = q * base
        out[base == 0.0] = 0.0
        return out
