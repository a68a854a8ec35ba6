"""The JSON document every CLI command reads.

Example::

    {
      "dimension": 2,
      "base_norm": {"name": "euclidean"},
      "profile": {"kind": "reciprocal", "k": 1.0},
      "conorm": "maximum",
      "subspaces": {"x_axis": [[1.0, 0.0]]},
      "sequences": {
        "harmonic": {"kind": "generator", "base": [1.0, 2.0], "direction": [3.0, 4.0],
                     "rate": "harmonic", "candidate_limit": [1.0, 2.0]}
      }
    }
"""
import json
import logging
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.errors.spec_file_errors import SpecFileInvalid, SpecFileNotReadable, UnknownReference
from app.models.antinorm import FuzzyAntiNorm
from app.models.profile import DecayProfile
from app.models.sequence import VectorSequence
from app.models.space import BaseNormKind, VectorSpace
from app.models.subspace import Subspace
from app.models.tconorm import TConorm, TConormKind
from app.utils.export import sha256_digest

logger = logging.getLogger(__name__)


class BaseNormSpec(BaseModel):
    name: BaseNormKind
    p: Optional[float] = None

    model_config = ConfigDict(extra="forbid")


class SpaceSpecFile(BaseModel):
    dimension: int = Field(..., ge=1)
    base_norm: BaseNormSpec
    profile: DecayProfile
    conorm: TConormKind
    subspaces: dict[str, list[list[float]]] = Field(default_factory=dict)
    sequences: dict[str, VectorSequence] = Field(default_factory=dict)

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _check_references(self) -> "SpaceSpecFile":
        self.space()
        for name in self.subspaces:
            self.subspace(name)
        for name, sequence in self.sequences.items():
            if sequence.dimension != self.dimension:
                raise ValueError(
                    f"sequence {name!r} has dimension {sequence.dimension}, expected {self.dimension}"
                )
        return self

    def space(self) -> VectorSpace:
        return VectorSpace(dimension=self.dimension, base_norm=self.base_norm.name, p=self.base_norm.p)

    def antinorm(self) -> FuzzyAntiNorm:
        return FuzzyAntiNorm(space=self.space(), profile=self.profile, conorm=TConorm(kind=self.conorm))

    def subspace(self, name: str) -> Subspace:
        if name not in self.subspaces:
            raise UnknownReference(f"subspace {name!r} is not declared (known: {sorted(self.subspaces)})")
        basis = tuple(tuple(v) for v in self.subspaces[name])
        return Subspace(dimension=self.dimension, basis=basis)

    def sequence(self, name: str) -> VectorSequence:
        if name not in self.sequences:
            raise UnknownReference(f"sequence {name!r} is not declared (known: {sorted(self.sequences)})")
        return self.sequences[name]


def _format_validation_error(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        path = ".".join(str(part) for part in err["loc"]) or "<root>"
        lines.append(f"{path}: {err['msg']}")
    return "; ".join(lines)


def load_spec_file(path: str | Path) -> tuple[SpaceSpecFile, str]:
    """Read and validate a spec file. Returns the document and the sha256 of its bytes."""
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise SpecFileNotReadable(f"cannot read spec file {path}: {exc}") from exc

    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        if isinstance(exc, json.JSONDecodeError):
            raise SpecFileInvalid(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        raise SpecFileInvalid(f"{path}: not valid UTF-8 text") from exc

    try:
        spec = SpaceSpecFile.model_validate(data)
    except ValidationError as exc:
        raise SpecFileInvalid(f"{path}: {_format_validation_error(exc)}") from exc

    logger.debug("loaded spec file %s (dimension %d, profile %s)", path, spec.dimension, spec.profile.kind)
    return spec, sha256_digest(raw)
