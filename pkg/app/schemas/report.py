"""Pydantic shapes for every structured outcome the toolkit produces."""
from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from app.core.tolerances import LEMMA_ATOL


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

class AxiomCheck(BaseModel):
    """One axiom or condition checked on samples.

    `required=False` marks conditions that are flagged but do not fail the
    report (the supremum and strictness conditions of an anti-norm).
    """
    axiom: str
    passed: bool
    required: bool = True
    samples_tested: int = 0
    worst_violation: float = 0.0
    witness: dict[str, Any] = Field(default_factory=dict)
    note: Optional[str] = None


class AxiomReport(BaseModel):
    subject: str
    sample_count: int
    seed: Optional[int] = None
    checks: List[AxiomCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.required)

    def check(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)


# ---------------------------------------------------------------------------
# α-cut duality
# ---------------------------------------------------------------------------

class LemmaReport(BaseModel):
    alpha: float
    x: List[float]
    alpha_norm: float
    membership_at_norm: float
    inequality_holds: bool
    biconditional_error: float
    converse_solution: float
    converse_relative_error: float

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            self.inequality_holds
            and self.biconditional_error <= LEMMA_ATOL
            and self.converse_relative_error <= LEMMA_ATOL
        )


class ReconstructionPoint(BaseModel):
    x_id: int
    x: List[float]
    t: float
    nu: float
    nu_prime: float
    error: float


class ReconstructionResult(BaseModel):
    points: List[ReconstructionPoint]
    sup_error: float
    caveat: Optional[str] = None

    @model_validator(mode="after")
    def _sup_matches_grid(self) -> "ReconstructionResult":
        grid_max = max((p.error for p in self.points), default=0.0)
        if self.sup_error != grid_max:
            raise ValueError(f"sup_error {self.sup_error} differs from the grid maximum {grid_max}")
        return self


class ContinuityTrace(BaseModel):
    side: str
    ns: List[int]
    alphas: List[float]
    errors: List[float]
    mean_value_bound: float
    monotone: bool
    decays: bool

    @computed_field
    @property
    def error_at_n_max(self) -> float:
        return self.errors[-1]


class ContinuityReport(BaseModel):
    alpha: float
    schedule: str
    n_max: int
    traces: List[ContinuityTrace]
    trivial: bool = False
    strictness_witness: Optional[float] = None
    passed: bool


class FamilyRoundTripReport(BaseModel):
    samples: int
    seed: int
    sup_error: float
    worst: dict[str, Any] = Field(default_factory=dict)
    passed: bool


class AntiBallReport(BaseModel):
    alpha: float
    samples: int
    agreements: int
    band_points: int
    disagreements: int
    bounding_radius: float
    expected_radius: float
    witness: dict[str, Any] = Field(default_factory=dict)
    strictness_witness: Optional[float] = None
    passed: bool


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------

class Verdict(str, Enum):
    CONVERGES = "converges"
    CAUCHY = "cauchy"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


class ConvergenceVerdict(BaseModel):
    """Outcome of one convergence-type check on one α.

    `estimates[i]` is the limit estimate at `t_grid[i]`;
    `worst_tail_membership[i]` the worst value over the reported window.
    """
    check: str
    verdict: Verdict
    alpha: Optional[float] = None
    threshold: float
    t_grid: List[float] = Field(default_factory=list)
    tail_window: Optional[tuple[int, int]] = None
    estimates: List[float] = Field(default_factory=list)
    worst_tail_membership: List[float] = Field(default_factory=list)
    source: str
    witness: Optional[dict[str, Any]] = None
    note: Optional[str] = None

    @model_validator(mode="after")
    def _converges_is_certified(self) -> "ConvergenceVerdict":
        if self.verdict is Verdict.CONVERGES and self.check.startswith("fuzzy"):
            if any(w >= self.threshold for w in self.worst_tail_membership):
                raise ValueError("a converging verdict needs every tail membership below the threshold")
        return self

    @property
    def holds(self) -> bool:
        return self.verdict in (Verdict.CONVERGES, Verdict.CAUCHY)


class EquivalenceRow(BaseModel):
    alpha: float
    fuzzy: ConvergenceVerdict
    alpha_norm: ConvergenceVerdict

    @computed_field
    @property
    def agree(self) -> bool:
        return self.fuzzy.holds == self.alpha_norm.holds


class EquivalenceReport(BaseModel):
    rows: List[EquivalenceRow]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.agree for r in self.rows)


class ImplicationCheck(BaseModel):
    name: str
    premise: bool
    conclusion: bool
    detail: dict[str, Any] = Field(default_factory=dict)

    @computed_field
    @property
    def holds(self) -> bool:
        return (not self.premise) or self.conclusion


class ImplicationReport(BaseModel):
    alpha: float
    checks: List[ImplicationCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)


class CompletenessDiagnostic(BaseModel):
    alpha: float
    alpha_norm_cauchy: Verdict
    fuzzy_cauchy: Verdict
    fuzzy_convergence: Verdict
    status: str
    note: str


# ---------------------------------------------------------------------------
# Riesz
# ---------------------------------------------------------------------------

class RieszWitness(BaseModel):
    y: List[float]
    alpha: float
    epsilon: float
    source_vector: List[float]
    minimizer: List[float]
    achieved_unit_norm: float
    achieved_distance_lower_bound: float
    verification_samples: int = 0


class SubspaceDistance(BaseModel):
    distance: float
    minimizer: List[float]
    method: str


class CompactnessReport(BaseModel):
    alpha: float
    dimension: int
    samples: int
    inside: int
    max_inside_radius: float
    expected_radius: float
    bounded: bool
    closed: bool
    closedness_gap: float
    interval: Optional[tuple[float, float]] = None
    strictness_witness: Optional[float] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.bounded and self.closed


# ---------------------------------------------------------------------------
# CLI run report
# ---------------------------------------------------------------------------

class CheckRecord(BaseModel):
    check_id: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    verdict: str
    worst_violation: Optional[float] = None
    witnesses: dict[str, Any] = Field(default_factory=dict)


class RunReport(BaseModel):
    tool_version: str
    command: str
    input_digest: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        """Flagged records (conditions outside the required set) do not fail a run."""
        return all(c.verdict != "fail" for c in self.checks)
