# app/errors/tconorm_errors.py

class TConormError(ValueError):
    """Base exception for t-conorm related errors."""
    pass

class InvalidUnitValue(TConormError):
    """Raised when a membership value lies outside [0, 1]."""
    pass

class NoDominatedOperand(TConormError):
    """Raised when no r in (0, 1) satisfies r1 > r ⋄ r2."""
    pass
