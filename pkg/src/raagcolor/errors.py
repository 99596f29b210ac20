"""Exception classes. Each carries the CLI exit code for its error class."""


class RaagColorError(Exception):
    exit_code = 1


class ParseError(RaagColorError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(RaagColorError, ValueError):
    exit_code = 3


class VerificationError(RaagColorError):
    """A homomorphism failed the edge-relation check or the H1 check."""

    exit_code = 4

    def __init__(self, message, bad_edges=(), h1_failed=False):
        super().__init__(message)
        self.bad_edges = tuple(bad_edges)
        self.h1_failed = h1_failed


class InternalError(RaagColorError, AssertionError):
    exit_code = 5
