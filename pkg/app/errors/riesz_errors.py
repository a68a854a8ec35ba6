# app/errors/riesz_errors.py

class RieszError(ValueError):
    """Base exception for Riesz witness construction."""
    pass

class RankDeficientBasis(RieszError):
    """Raised when a subspace basis is not linearly independent."""
    pass

class SubspaceNotProper(RieszError):
    """Raised when the subspace spans the whole space, so no witness exists."""
    pass

class WitnessConstructionFailed(RieszError):
    """Raised when a constructed witness does not re-verify its own invariants."""
    pass


class InvalidEpsilon(RieszError):
    """Raised when ε is outside the open interval (0, 1)."""
    pass
