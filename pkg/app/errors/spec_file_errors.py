# app/errors/spec_file_errors.py

class SpecFileError(ValueError):
    """Base exception for spec file loading."""
    pass

class SpecFileNotReadable(SpecFileError):
    """Raised when the spec file cannot be opened."""
    pass

class SpecFileInvalid(SpecFileError):
    """Raised when the spec file does not parse or validate."""
    pass

class UnknownReference(SpecFileError):
    """Raised when a subspace or sequence id is not declared in the spec file."""
    pass
