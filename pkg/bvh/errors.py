"""Exception hierarchy shared by the library and the CLI."""

from typing import Any, Optional


class BVHError(Exception):
    """Base error carrying a human-readable detail and a CLI exit code."""

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidGroupError(BVHError):
    """Cayley table or catalog specification is not a valid group."""


class SubgroupError(BVHError):
    """A set of elements is not a subgroup of the expected parent."""


class HomomorphismError(BVHError):
    """Generator images do not extend to a homomorphism."""


class NotCentralError(BVHError):
    """An element required to be central is not."""


class NotACocycleError(BVHError):
    """A cochain required to be a cocycle is not."""


class NotInSubspaceError(BVHError):
    """A vector lies outside the subspace it was reduced against."""


class DimensionMismatchError(BVHError):
    """Vectors, matrices or cochains of incompatible shape or modulus."""


class UnsupportedGroupError(BVHError):
    """Named classes are not available for this group."""


class BudgetExceededError(BVHError):
    """An exact computation would exceed the configured work limits."""

    def __init__(self, detail: str, required: int, allowed: int):
        super().__init__(detail)
        self.required = required
        self.allowed = allowed


class LieAxiomError(BVHError):
    """Structure constants violate an axiom of Lie algebras."""

    def __init__(self, detail: str, witness: Optional[Any] = None):
        super().__init__(detail)
        self.witness = witness


class BracketMismatchError(BVHError):
    """The BV-identity bracket disagrees with the direct degree-one formula."""
