"""Exception hierarchy shared by every module of the package."""


class MowspError(Exception):
    """Base class for all errors raised by :mod:`mowsp`."""


class InputError(MowspError, ValueError):
    """Invalid argument: wrong dimensions, out-of-range ids, bad parameters."""


class FormatError(InputError):
    """A file does not follow its declared text format."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LogicError(MowspError, RuntimeError):
    """An operation was called in a way its contract forbids."""


class StateError(MowspError, IndexError):
    """Operation not allowed in the current state (e.g. pop from an empty heap)."""


class ResourceError(MowspError, RuntimeError):
    """A configured resource cap was exceeded."""


class GenerationError(MowspError, RuntimeError):
    """A random generator produced an unusable instance."""


class VerificationError(MowspError, AssertionError):
    """Two solvers disagree, or a debug invariant was violated."""
