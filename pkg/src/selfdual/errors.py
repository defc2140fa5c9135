"""Exception hierarchy.

Every domain error derives from :class:`GraphError`; the CLI maps these to
exit code 1 and prints ``<ClassName>: <message>`` on stderr.
"""


class GraphError(Exception):
    """Base class for all domain errors raised by this package."""


# embedding kernel
class VertexOutOfRange(GraphError):
    pass


class NonSymmetricAdjacency(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotGenusZero(GraphError):
    pass


class MultiEdgeInDual(GraphError):
    pass


class TooSmall(GraphError):
    pass


class NotBipartite(GraphError):
    pass


# seeds
class BadArity(GraphError):
    pass


# local moves
class InvalidTriple(GraphError):
    pass


class AcrossFaceContainsU1(GraphError):
    pass


class InvalidPosition(GraphError):
    pass


# radial
class NotTwoConnected(GraphError):
    pass


class NotQuadrangulation(GraphError):
    pass


# algorithms
class BadN(GraphError):
    pass


class EntryBelowFour(GraphError):
    pass


# verification
class NotPolyhedral(GraphError):
    pass


class HypothesisNotMet(GraphError):
    """A conditional bound was asked for but its hypothesis does not hold."""
