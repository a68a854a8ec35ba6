# app/errors/__init__.py

from app.errors.alphacut_errors import AlphaCutError, InvalidAlpha, StrictProfileRequired, ZeroVectorNotAllowed
from app.errors.antinorm_errors import AntiNormError, DimensionMismatch, InvalidProfile, InvalidSpace, SpaceMismatch
from app.errors.riesz_errors import (
    InvalidEpsilon,
    RankDeficientBasis,
    RieszError,
    SubspaceNotProper,
    WitnessConstructionFailed,
)
from app.errors.sequence_errors import InsufficientData, MissingCandidateLimit, SequenceError
from app.errors.spec_file_errors import SpecFileError, SpecFileInvalid, SpecFileNotReadable, UnknownReference
from app.errors.tconorm_errors import InvalidUnitValue, NoDominatedOperand, TConormError
