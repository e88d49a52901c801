"""Exception hierarchy for the planecensus package."""


class PlaneGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEmbedding(PlaneGraphError):
    """The given rotation system does not describe a valid simple connected graph."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class LoopEdge(InvalidEmbedding):
    """A vertex lists itself as a neighbor."""


class DuplicateNeighbor(InvalidEmbedding):
    """A rotation lists the same neighbor twice (multigraphs are rejected)."""


class AsymmetricAdjacency(InvalidEmbedding):
    """v appears in the rotation of u but u not in the rotation of v."""


class Disconnected(InvalidEmbedding):
    """The underlying graph is not connected."""


class InternalInconsistency(PlaneGraphError):
    """An impossible intermediate value; signals a bug, not bad input."""


class NonPlanarEmbedding(PlaneGraphError):
    """The rotation system has genus > 0, so no exterior face can be designated."""


class BadFaceId(PlaneGraphError):
    """Face id outside the enumerated face set."""


class NotTwoConnected(PlaneGraphError):
    """Operation requires a 2-connected graph but a cut vertex exists."""


class BadEta(PlaneGraphError):
    """Gonality parameter below 3."""


class DegreeTooLarge(PlaneGraphError):
    """Relation only valid for maximum degree 4 but a higher degree is present."""


class MixedGonalityOutOfRange(PlaneGraphError):
    """Face-count relation needs interior gonalities within {3,4} and degrees at most 4."""


class NegativePrediction(PlaneGraphError):
    """Predicted triangle count is negative; the input violates the formula's domain."""


class LengthMismatch(PlaneGraphError):
    """Adjacency rows and exterior marks have different lengths."""


class BadSize(PlaneGraphError):
    """Generator size parameter out of range."""


class NotInteriorQuad(PlaneGraphError):
    """Chosen face is not an interior quadrilateral with four distinct corners."""


class NotInteriorTriangle(PlaneGraphError):
    """Chosen face is not an interior triangle with three distinct corners."""


class SizeTooLarge(PlaneGraphError):
    """Exhaustive enumeration is capped at 8 vertices."""


class DocumentSyntaxError(PlaneGraphError):
    """Malformed embedding document."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
