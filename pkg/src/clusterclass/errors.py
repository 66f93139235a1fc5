"""Exception hierarchy shared by all modules.

Every error carries a machine-readable ``code`` (the class name) and a
``detail`` dict so the CLI can emit structured error objects.
"""

from __future__ import annotations

from typing import Any


class ClusterError(Exception):
    """Base class for all domain errors raised by this package."""

    def __init__(self, message: str, **detail: Any):
        super().__init__(message)
        self.message = message
        self.detail = detail

    @property
    def code(self) -> str:
        return type(self).__name__

    def as_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "detail": self.detail}


class ShapeMismatch(ClusterError):
    """Matrix dimensions disagree with the declared (n, m)."""


class NotSignSkewSymmetric(ClusterError):
    """Some principal pair violates b_ij = b_ji = 0 or b_ij * b_ji < 0."""


class NotSkewSymmetrizable(ClusterError):
    """No positive integer symmetrizer exists; detail lists an inconsistent cycle."""


class IndexOutOfRange(ClusterError):
    """Index is frozen or outside the valid range."""


class TooLargeForCanonicalization(ClusterError):
    """Seed exceeds the exhaustive-permutation size guard."""


class IsolatedIndexOverField(ClusterError):
    """Operation requires no isolated exchangeable indices over a field."""


class NotAcyclic(ClusterError):
    """Operation is only defined for acyclic seeds."""


class UnknownLabel(ClusterError):
    """Factor label does not occur in any exchange polynomial of the seed."""


class PartnerSetTooLarge(ClusterError):
    """A factor's partner set exceeds the subset-enumeration guard."""


class IndexNotFrozen(ClusterError):
    """A reportedly frozen index is exchangeable or out of bounds."""


class UnsupportedFamilyParameter(ClusterError):
    """Named seed family does not admit the requested parameters."""


class TorsionDetected(ClusterError):
    """Internal consistency failure: the relation matrix showed torsion.

    The class group of a Krull cluster algebra is free, so this firing
    always indicates an implementation bug, never a property of the input.
    """
