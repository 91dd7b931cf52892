"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SkelrecError(Exception):
    """Base class; ``diagnostic`` carries a JSON-serializable payload for the CLI."""

    def __init__(self, message: str, diagnostic: dict | None = None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class BoundsError(SkelrecError, ValueError):
    pass


class ShapeError(SkelrecError, ValueError):
    pass


class StitchingError(SkelrecError, ValueError):
    pass


class DomainError(SkelrecError, ValueError):
    pass


class ReconstructionError(SkelrecError):
    """Input incidences violate a necessary condition of the reconstruction."""


class HypothesisViolation(ReconstructionError):
    """Input is visibly not from a normal simplicial pseudomanifold."""
