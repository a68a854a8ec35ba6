# app/errors/alphacut_errors.py

class AlphaCutError(ValueError):
    """Base exception for α-norm family errors."""
    pass

class InvalidAlpha(AlphaCutError):
    """Raised when α is outside the open interval (0, 1)."""
    pass

class StrictProfileRequired(AlphaCutError):
    """Raised when an operation needs a strict profile (supremum and strictness conditions) and the profile breaks them."""
    pass

class ZeroVectorNotAllowed(AlphaCutError):
    """Raised when an operation needs x ≠ θ."""
    pass
