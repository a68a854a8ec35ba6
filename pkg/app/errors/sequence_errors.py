# app/errors/sequence_errors.py

class SequenceError(ValueError):
    """Base exception for sequence diagnostics."""
    pass

class MissingCandidateLimit(SequenceError):
    """Raised when a convergence check is requested without a candidate limit."""
    pass

class InsufficientData(SequenceError):
    """Raised when an explicit sequence is too short for the requested window."""
    pass
