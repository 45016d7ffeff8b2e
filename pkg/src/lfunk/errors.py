"""Exceptions raised by the lfunk library."""


class LFunkError(ValueError):
    """Base class for every input/domain error raised by lfunk."""


class DomainError(LFunkError):
    """A point lies on or outside the navigation disk."""


class WindTooStrong(LFunkError):
    """The wind speed is not strictly below the boat speed."""


class ZeroVector(LFunkError):
    """A direction vector was zero where a nonzero one is required."""


class NotApplicable(LFunkError):
    """The quantity is undefined for this wind strength (typically lambda = 0)."""


class LineOutsideDomain(LFunkError):
    """The line does not meet the navigation disk."""


class RealizerOutsideDomain(LFunkError):
    """The tangency point realizing a line distance falls outside the disk."""
