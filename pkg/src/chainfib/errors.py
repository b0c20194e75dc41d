"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`ModelError`,
so callers (and the CLI) can separate model/domain failures from bugs.
"""

from __future__ import annotations


class ModelError(Exception):
    """Base class for domain and model errors."""


class IntegerOverflow(ModelError, OverflowError):
    """A value left the signed 64-bit range."""


class OutsideCone(ModelError):
    """The class is not in the (known) fibered cone of the model."""


class NotPrimitive(ModelError):
    """The class has a common divisor greater than one."""


class ParityError(ModelError):
    """norm + boundaries is odd, so no surface has that type."""


class NegativeGenus(ModelError):
    """The norm and boundary count would force a negative genus."""


class NonHyperbolicSurface(ModelError):
    """The surface has non-negative Euler characteristic."""


class DomainError(ModelError):
    """Arguments fall outside the range where a formula is valid.

    ``failed`` lists the human-readable conditions that did not hold.
    """

    def __init__(self, message: str, failed: list[str] | None = None) -> None:
        super().__init__(message)
        self.failed = list(failed or [])


class ExcludedResidue(ModelError):
    """A sequence family is not defined for this residue of k."""


class NonConvergence(ModelError):
    """Power iteration hit its iteration cap."""


class ConsistencyError(ModelError):
    """Two independent computations of the same quantity disagree."""
