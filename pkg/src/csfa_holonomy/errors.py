"""Exception hierarchy shared by every module."""


class HolonomyError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HolonomyError, ValueError):
    """Malformed or inconsistent user input (exit code 2 on the command line)."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(HolonomyError):
    """A size guard was exceeded (exit code 3 on the command line)."""


class PreconditionError(HolonomyError, ValueError):
    """An operation was called on an input outside its domain."""


class NotAnSFAError(PreconditionError):
    pass


class TheoremViolation(HolonomyError):
    """A computed object contradicts a proven statement about CSFA.

    Seeing this means either the input is not what the caller claimed or
    there is a bug; it is never expected on valid inputs.
    """
