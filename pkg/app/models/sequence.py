from enum import Enum
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config import config
from app.errors.sequence_errors import InsufficientData

Vector = tuple[float, ...]


class RateRule(str, Enum):
    HARMONIC = "harmonic"              # c(n) = 1/n
    INVERSE_SQUARE = "inverse_square"  # c(n) = 1/n²
    GEOMETRIC = "geometric"            # c(n) = q^n
    CONSTANT = "constant"              # c(n) = 1


class ExplicitSequence(BaseModel):
    """A finite list of terms x_1, ..., x_N."""
    kind: Literal["explicit"] = "explicit"
    terms: tuple[Vector, ...] = Field(..., min_length=1)
    candidate_limit: Optional[Vector] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_dimensions(self) -> "ExplicitSequence":
        n = len(self.terms[0])
        if n == 0:
            raise ValueError("terms must be non-empty vectors")
        for i, term in enumerate(self.terms):
            if len(term) != n:
                raise ValueError(f"term {i + 1} has dimension {len(term)}, expected {n}")
        if self.candidate_limit is not None and len(self.candidate_limit) != n:
            raise ValueError(f"candidate_limit has dimension {len(self.candidate_limit)}, expected {n}")
        return self

    @property
    def dimension(self) -> int:
        return len(self.terms[0])

    @property
    def length(self) -> int:
        return len(self.terms)

    def window(self, start: int, stop: int) -> np.ndarray:
        """Terms x_start .. x_{stop-1} (1-based) as rows."""
        if start < 1 or stop - 1 > self.length or stop <= start:
            raise InsufficientData(f"window [{start}, {stop}) not inside 1..{self.length}")
        return np.asarray(self.terms[start - 1:stop - 1], dtype=float)


class GeneratorSequence(BaseModel):
    """x_n = base + c(n)·direction with a fixed rate rule c."""
    kind: Literal["generator"] = "generator"
    base: Vector
    direction: Vector
    rate: RateRule
    q: Optional[float] = None
    horizon: int = Field(default_factory=lambda: config.DEFAULT_HORIZON, ge=1)
    candidate_limit: Optional[Vector] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "GeneratorSequence":
        n = len(self.base)
        if n == 0:
            raise ValueError("base must be a non-empty vector")
        if len(self.direction) != n:
            raise ValueError(f"direction has dimension {len(self.direction)}, expected {n}")
        if self.candidate_limit is not None and len(self.candidate_limit) != n:
            raise ValueError(f"candidate_limit has dimension {len(self.candidate_limit)}, expected {n}")
        if self.rate is RateRule.GEOMETRIC:
            if self.q is None or not 0.0 < self.q < 1.0:
                raise ValueError(f"geometric rate needs 0 < q < 1, got {self.q!r}")
        elif self.q is not None:
            raise ValueError("q is only used by the geometric rate")
        return self

    @property
    def dimension(self) -> int:
        return len(self.base)

    @property
    def limit_coefficient(self) -> float:
        return 1.0 if self.rate is RateRule.CONSTANT else 0.0

    def coefficients(self, ns) -> np.ndarray:
        ns = np.asarray(ns, dtype=float)
        if self.rate is RateRule.HARMONIC:
            return 1.0 / ns
        if self.rate is RateRule.INVERSE_SQUARE:
            return 1.0 / (ns * ns)
        if self.rate is RateRule.GEOMETRIC:
            return np.power(self.q, ns)
        return np.ones_like(ns)

    def terms_at(self, ns) -> np.ndarray:
        c = self.coefficients(ns)
        return np.asarray(self.base)[None, :] + c[:, None] * np.asarray(self.direction)[None, :]

    def window(self, start: int, stop: int) -> np.ndarray:
        return self.terms_at(np.arange(start, stop, dtype=float))

    def limit(self) -> np.ndarray:
        """lim x_n in closed form."""
        return np.asarray(self.base) + self.limit_coefficient * np.asarray(self.direction)


VectorSequence = Annotated[Union[ExplicitSequence, GeneratorSequence], Field(discriminator="kind")]
