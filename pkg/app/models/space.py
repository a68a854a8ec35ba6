from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.errors.antinorm_errors import DimensionMismatch, InvalidSpace


class BaseNormKind(str, Enum):
    EUCLIDEAN = "euclidean"
    MAXIMUM = "maximum"
    P_NORM = "p_norm"


class VectorSpace(BaseModel):
    """R^n with a crisp base norm. θ is the all-zeros vector."""
    dimension: int = Field(..., ge=1)
    base_norm: BaseNormKind = BaseNormKind.EUCLIDEAN
    p: Optional[float] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_p(self) -> "VectorSpace":
        if self.base_norm is BaseNormKind.P_NORM:
            if self.p is None or not self.p >= 1.0:
                raise InvalidSpace(f"p-norm needs p >= 1, got {self.p!r}")
        elif self.p is not None:
            raise InvalidSpace(f"p is only meaningful for the p-norm, got base_norm={self.base_norm.value}")
        return self

    @property
    def ord(self) -> float:
        """The `ord` argument numpy expects for this norm."""
        if self.base_norm is BaseNormKind.EUCLIDEAN:
            return 2.0
        if self.base_norm is BaseNormKind.MAXIMUM:
            return np.inf
        return float(self.p)

    def zero(self) -> np.ndarray:
        return np.zeros(self.dimension)

    def coerce(self, x) -> np.ndarray:
        v = np.asarray(x, dtype=float)
        if v.shape != (self.dimension,):
            raise DimensionMismatch(f"expected a vector of dimension {self.dimension}, got shape {v.shape}")
        return v

    def coerce_many(self, xs) -> np.ndarray:
        m = np.asarray(xs, dtype=float)
        if m.ndim != 2 or m.shape[1] != self.dimension:
            raise DimensionMismatch(f"expected an (m, {self.dimension}) array, got shape {m.shape}")
        return m

    def norm(self, x) -> float:
        return float(np.linalg.norm(self.coerce(x), ord=self.ord))

    def norms(self, xs) -> np.ndarray:
        return np.linalg.norm(self.coerce_many(xs), ord=self.ord, axis=1)

    def is_zero(self, x) -> bool:
        return not np.any(self.coerce(x))
