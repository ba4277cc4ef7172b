"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: format errors exit 2, hypothesis and
precondition errors exit 3, construction/validation failures exit 4.
"""

from __future__ import annotations


class ArcEmbedError(Exception):
    """Base class for all errors raised by this package."""


class MapFormatError(ArcEmbedError):
    """Malformed map data: bad rational literal, unsorted or duplicate
    breakpoints, values outside the codomain, fewer than two breakpoints."""


class DomainError(ArcEmbedError):
    """Evaluation point outside the map's domain."""


class CompositionError(ArcEmbedError):
    """range(g) is not contained in domain(f), so f o g is undefined."""


class CenterError(ArcEmbedError):
    """Recentering data is inconsistent (f(q) != p)."""


class BoundaryError(ArcEmbedError):
    """A recentering pivot sits on a domain/codomain endpoint."""


class HypothesisError(ArcEmbedError):
    """A standing hypothesis fails: map not centered, a half restriction is
    constant, or a single-orientation requirement is violated."""


class StitchPreconditionError(ArcEmbedError):
    """A stitching hypothesis fails.  ``hypothesis`` names which one."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class ConstructionError(ArcEmbedError):
    """Geometric construction did not validate within the retry budget."""


class RefineError(ArcEmbedError):
    """Stage refinement cannot proceed (tube width underflow or an invalid
    previous stage)."""


class InternalConsistencyError(ArcEmbedError):
    """An outcome the theory rules out was observed; indicates a bug, not a
    mathematical result."""
