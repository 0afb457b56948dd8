"""Exception types shared across the package."""


class DependentBasisError(ValueError):
    """A list of vectors or matrices that must be independent is not."""


class MembershipError(ValueError):
    """A witness operator fails a required membership condition.

    ``which`` is ``"in_space"`` (the operator lies in S when it must not)
    or ``"not_in_closure"`` (the operator is outside the reflexive closure).
    """

    def __init__(self, message, which):
        super().__init__(message)
        self.which = which


class GuardExceeded(RuntimeError):
    """An enumeration would exceed the configured size guard."""


class TheoremViolation(RuntimeError):
    """A scanned space broke the minimal-rank bound; carries the report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report
