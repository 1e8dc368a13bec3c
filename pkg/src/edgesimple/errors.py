"""Exception hierarchy shared by every module."""


class PolytopeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PolytopeError):
    pass


class NotFullDimensional(PolytopeError):
    pass


class NonExtremePoint(PolytopeError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"input point {index} is not a vertex of the hull")


class NoGeometry(PolytopeError):
    """A geometric operation was asked of a combinatorial-only polytope."""


class NotEulerian(PolytopeError):
    pass


class LengthMismatch(PolytopeError):
    pass


class InvalidFace(PolytopeError):
    pass


class UnsupportedDim(PolytopeError):
    pass


class NotAVertex(PolytopeError):
    pass


class NotSimple(PolytopeError):
    pass


class NotSimpleInEdges(PolytopeError):
    pass


class NotInfrequent(PolytopeError):
    pass


class NotGeneral(PolytopeError):
    pass


class DegreeOutOfRange(PolytopeError):
    pass


class DegreeMismatch(PolytopeError):
    pass


class DegreeExceeds(PolytopeError):
    pass


class BadRange(PolytopeError):
    pass


class VerificationError(PolytopeError):
    """A post-condition that the mathematics guarantees did not hold."""
