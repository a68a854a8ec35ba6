"""Shared fixtures: spaces, anti-norms and spec files used across the test packages."""
import json
from pathlib import Path

import pytest

from app.models import (
    ExponentialProfile,
    FuzzyAntiNorm,
    ReciprocalProfile,
    StepProfile,
    TabulatedProfile,
    TConorm,
    TConormKind,
    VectorSpace,
)

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def make_antinorm(profile, dimension: int = 2, base_norm: str = "euclidean", p=None,
                  conorm: TConormKind = TConormKind.MAXIMUM) -> FuzzyAntiNorm:
    return FuzzyAntiNorm(
        space=VectorSpace(dimension=dimension, base_norm=base_norm, p=p),
        profile=profile,
        conorm=TConorm(kind=conorm),
    )


@pytest.fixture
def reciprocal_1() -> FuzzyAntiNorm:
    """ν(x, t) = ‖x‖ / (t + ‖x‖) on the euclidean plane."""
    return make_antinorm(ReciprocalProfile(k=1.0))


@pytest.fixture
def reciprocal_2_in_3d() -> FuzzyAntiNorm:
    return make_antinorm(ReciprocalProfile(k=2.0), dimension=3)


@pytest.fixture
def step_plane() -> FuzzyAntiNorm:
    """Step anti-norm: ν(x, t) = 1 iff t <= ‖x‖."""
    return make_antinorm(StepProfile())


@pytest.fixture
def exponential_1() -> FuzzyAntiNorm:
    return make_antinorm(ExponentialProfile(rate=1.0))


@pytest.fixture
def strict_tabulated() -> FuzzyAntiNorm:
    """Continuous, strictly decreasing table with no closed-form Q."""
    points = ((0.5, 1.0), (1.0, 0.8), (2.0, 0.5), (4.0, 0.2), (8.0, 0.0))
    return make_antinorm(TabulatedProfile(points=points))


@pytest.fixture
def increasing_tabulated() -> FuzzyAntiNorm:
    """A table that rises between u = 2 and u = 3."""
    points = ((1.0, 1.0), (2.0, 0.3), (3.0, 0.6), (4.0, 0.0))
    return make_antinorm(TabulatedProfile(points=points))


PLATEAU_POINTS = ((1.0, 1.0), (2.0, 0.5), (3.0, 0.5), (4.0, 0.0))


@pytest.fixture
def plateau_tabulated() -> FuzzyAntiNorm:
    """Continuous but flat at 0.5 on [2, 3], so Q jumps from 2 to 3 at α = 0.5."""
    return make_antinorm(TabulatedProfile(points=PLATEAU_POINTS))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def write_spec(tmp_path):
    """Write a spec dict as JSON and return its path."""
    def _write(spec: dict, name: str = "spec.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(spec), encoding="utf-8")
        return path
    return _write
