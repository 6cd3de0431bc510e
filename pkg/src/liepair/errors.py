"""Shared exception types.

InternalInvariantError marks a broken internal invariant (for example a
bracket that should be vertical but is not); the command line maps it to
its own exit code so it is never confused with bad input.
"""


class InternalInvariantError(RuntimeError):
    pass


class LoadError(ValueError):
    """Malformed input file: missing keys, bad shapes, bad index keys."""


class ValidationFailure(Exception):
    """Structure validation failed; carries the report."""

    def __init__(self, report):
        super().__init__("structure validation failed")
        self.report = report
