"""Exception hierarchy shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ContractError(ValueError):
    """A structural precondition (e.g. transitivity) does not hold."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured cap."""


class NotDDConsistent(DomainError):
    """A block/partition pair cannot come from a block-transitive imprimitive design."""

    def __init__(self, message: str, *, k: int, c: int, d: int, inner: int, outer: int):
        super().__init__(message)
        self.k = k
        self.c = c
        self.d = d
        self.inner = inner
        self.outer = outer


class VerificationError(RuntimeError):
    """A verification report contains failed checks."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(ch.check_id for ch in report.failures)
        super().__init__(f"verification failed: {failed}")
