import numpy as np
from pydantic import BaseModel, ConfigDict

from app.models.profile import DecayProfile
from app.models.space import VectorSpace
from app.models.tconorm import TConorm


class FuzzyAntiNorm(BaseModel):
    """ν on R^n built from a decay profile over a base norm.

    ν(x, t) = 1 for t <= 0, ν(θ, t) = 0 for t > 0, and f(t / ‖x‖) otherwise,
    which makes the homogeneity axiom hold by construction.
    """
    space: VectorSpace
    profile: DecayProfile
    conorm: TConorm = TConorm()

    model_config = ConfigDict(frozen=True)

    @property
    def dimension(self) -> int:
        return self.space.dimension

    @property
    def is_strict(self) -> bool:
        """The supremum and strictness conditions hold for the profile."""
        return self.profile.is_strict

    def evaluate(self, x, t: float) -> float:
        return float(self.evaluate_batch(self.space.coerce(x)[None, :], t)[0])

    def evaluate_batch(self, xs, t) -> np.ndarray:
        """ν over the rows of `xs`; `t` is a scalar or one time per row."""
        norms = self.space.norms(xs)
        t = np.broadcast_to(np.asarray(t, dtype=float), norms.shape)
        out = np.ones_like(norms)
        positive = t > 0.0
        at_zero = positive & (norms == 0.0)
        fuzzy = positive & (norms > 0.0)
        out[at_zero] = 0.0
        out[fuzzy] = self.profile.value(t[fuzzy] / norms[fuzzy])
        return out

    def evaluate_scaled(self, norm_value: float, t: float) -> float:
        """ν for any vector whose base norm is `norm_value`."""
        if t <= 0.0:
            return 1.0
        if norm_value == 0.0:
            return 0.0
        return float(self.profile.value(t / norm_value))
