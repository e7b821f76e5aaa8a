"""Shared exception types."""


class DomainError(ValueError):
    """An argument is outside the operation's input domain."""


class VerificationError(RuntimeError):
    """A cross-check between two computations found a mismatch.

    Carries the first offending tuple in ``counterexample``.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
