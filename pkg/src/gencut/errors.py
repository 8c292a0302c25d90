"""Exception types shared across the package."""


class GencutError(Exception):
    """Base class for all library errors."""


class InvalidFacet(GencutError):
    """A facet mentions a label outside the ground set."""


class GroundSetClash(GencutError):
    """Two complexes (or a complex and a fresh label) share ground-set labels."""


class NotAGraph(GencutError):
    """An operation restricted to graphs got a facet of cardinality > 2."""


class AmbientMismatch(GencutError):
    """Index sets of a functional and a point/matrix do not match."""


class NotInRowSpace(GencutError):
    """A margin functional is not in the row space of the marg-to-corr map."""


class NotFullDimensional(GencutError):
    """Gale transforms require a full-dimensional vertex configuration."""


class TooLarge(GencutError):
    """Input exceeds a configured size cap for an exact enumeration."""


class Degenerate(GencutError):
    """Fewer than two distinct points were given to the hull oracle."""
