# app/errors/antinorm_errors.py

class AntiNormError(ValueError):
    """Base exception for fuzzy anti-norm errors."""
    pass

class InvalidSpace(AntiNormError):
    """Raised when a vector space description is not usable (n < 1, p < 1)."""
    pass

class InvalidProfile(AntiNormError):
    """Raised when a decay profile has invalid parameters."""
    pass

class DimensionMismatch(AntiNormError):
    """Raised when a vector does not live in the space of the anti-norm."""
    pass

class SpaceMismatch(AntiNormError):
    """Raised when two anti-norms are combined over different spaces or conorms."""
    pass
