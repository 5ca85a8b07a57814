"""Exception types shared across the package."""

from __future__ import annotations


class GeonetError(Exception):
    """Base class for all domain errors raised by this package."""


class DuplicateVertexAngle(GeonetError):
    pass


class ZeroMultiplicity(GeonetError):
    pass


class SelfLoopEdge(GeonetError):
    pass


class DuplicateEdge(GeonetError):
    pass


class ExactDataMissing(GeonetError):
    """An exact-mode operation was asked of a network without exact positions."""


class InexactPosition(GeonetError):
    """A solver-grade operation needs exact positions (or exact tangent data)."""


class CrossingEdges(GeonetError):
    pass


class IsolatedVertex(GeonetError):
    pass


class DomainError(GeonetError):
    """Angle data outside the valid open domain of a closed-form expression."""


class ParseError(GeonetError):
    """Malformed network file.  Carries line/column when the JSON itself is bad."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class VersionError(GeonetError):
    pass


class NonConvergence(GeonetError):
    """Iteration budget exhausted; the best iterate so far rides along."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
