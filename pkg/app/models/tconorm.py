from enum import Enum
from typing import Annotated

import numpy as np
from pydantic import AfterValidator, BaseModel, ConfigDict

from app.errors.tconorm_errors import InvalidUnitValue


def unit_value(value: float) -> float:
    """Validate a membership value. Out-of-range input is an error, never clamped."""
    v = float(value)
    if not 0.0 <= v <= 1.0:  # NaN fails here too
        raise InvalidUnitValue(f"{value!r} is not a membership value in [0, 1]")
    return v


UnitValue = Annotated[float, AfterValidator(unit_value)]


class TConormKind(str, Enum):
    MAXIMUM = "maximum"
    PROBABILISTIC_SUM = "probabilistic_sum"
    BOUNDED_SUM = "bounded_sum"


class TConorm(BaseModel):
    """Binary aggregation ⋄ on [0, 1] used by the triangle-type axiom."""
    kind: TConormKind = TConormKind.MAXIMUM

    model_config = ConfigDict(frozen=True)

    def rule(self, a, b):
        """Closed-form rule, vectorised over numpy arrays. Operands are not validated."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if self.kind is TConormKind.MAXIMUM:
            return np.maximum(a, b)
        if self.kind is TConormKind.PROBABILISTIC_SUM:
            # a + b - ab keeps a ⋄ 0 = a exact; the clip only guards the last ulp
            return np.minimum(1.0, a + b - a * b)
        return np.minimum(1.0, a + b)

    def __call__(self, a: float, b: float) -> float:
        return float(self.rule(unit_value(a), unit_value(b)))
