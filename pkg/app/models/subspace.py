import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.tolerances import RANK_TOL
from app.errors.riesz_errors import RankDeficientBasis


class Subspace(BaseModel):
    """span(basis) in R^n; an empty basis is {θ}. Closed automatically in finite dimensions."""
    dimension: int = Field(..., ge=1)
    basis: tuple[tuple[float, ...], ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_basis(self) -> "Subspace":
        for i, vector in enumerate(self.basis):
            if len(vector) != self.dimension:
                raise ValueError(f"basis vector {i} has dimension {len(vector)}, expected {self.dimension}")
        if self.basis and np.linalg.matrix_rank(self.matrix, tol=RANK_TOL) != len(self.basis):
            raise RankDeficientBasis("subspace basis vectors are linearly dependent")
        return self

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        """Basis vectors as rows, shape (rank, n)."""
        return np.asarray(self.basis, dtype=float).reshape(len(self.basis), self.dimension)

    @property
    def is_proper(self) -> bool:
        return self.rank < self.dimension

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=float)
        if not self.basis:
            return bool(np.linalg.norm(v) <= RANK_TOL)
        stacked = np.vstack([self.matrix, v[None, :]])
        return int(np.linalg.matrix_rank(stacked, tol=RANK_TOL)) == self.rank

    def combine(self, coefficients) -> np.ndarray:
        """Σ c_i b_i for a vector of coefficients (or rows of them)."""
        c = np.asarray(coefficients, dtype=float)
        if not self.basis:
            return np.zeros(c.shape[:-1] + (self.dimension,))
        return c @ self.matrix
