"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every input or construction failure in this package."""


class DegenerateTriangleError(GeometryError):
    pass


class CoincidentPointsError(GeometryError):
    pass


class OffChordError(GeometryError):
    """The apex lies on the chord's line but outside the closed chord.

    No extended angle is defined there; callers decide what to do.
    """


class OnCircumcircleError(GeometryError):
    pass


class AtVertexError(GeometryError):
    pass


class AmbiguousVertexError(AtVertexError):
    """The point is a triangle vertex, whose isogonal image is a whole side."""


class IdenticalCirclesError(GeometryError):
    pass


class NoSolutionFoundError(GeometryError):
    pass


class IdenticalAnglesError(GeometryError):
    pass


class NotATriangleError(GeometryError):
    """Weights violate the strict triangle inequality."""


class DegenerateInputError(GeometryError):
    pass
