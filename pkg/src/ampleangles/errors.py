"""Exception hierarchy shared across the package."""


class AmpleAnglesError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(AmpleAnglesError):
    """Vectors or polyhedra of incompatible dimension were combined."""


class SncViolation(AmpleAnglesError):
    """A blow-up specification breaks the simple-normal-crossings rules."""


class UnknownCurve(AmpleAnglesError):
    """A curve identifier does not exist in the catalog."""


class IncompleteMoriCone(AmpleAnglesError):
    """The Mori generators are not certified complete; refusing to decide."""


class UnboundedPolyhedron(AmpleAnglesError):
    """Vertex enumeration was requested for an unbounded closure."""


class PairFileError(AmpleAnglesError):
    """A pair-description document is malformed.

    ``location`` points at the offending element, e.g. ``curves[1].class``.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
