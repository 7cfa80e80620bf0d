"""Exception hierarchy shared by all reflap modules."""


class ReflapError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(ReflapError):
    """A vertex index is out of range for the graph."""


class SelfLoopError(ReflapError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(ReflapError):
    """The same undirected edge was given twice (multigraphs unsupported)."""


class InvalidSpecError(ReflapError):
    """A generator was asked for an impossible size or boundary rule."""


class ParseError(ReflapError):
    """A graph file is malformed; carries the offending line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


class IsolatedVertexError(ReflapError):
    """A vertex has zero reflected degree; normalization is undefined."""


class EmptyInteriorError(ReflapError):
    """An interior-only operator was requested but every vertex is boundary."""


class NotSymmetricError(ReflapError):
    """The eigensolver was handed a matrix that is not symmetric."""


class NoConvergenceError(ReflapError):
    """The Jacobi sweep budget ran out before the off-diagonal mass vanished."""


class ClusteringAmbiguousError(ReflapError):
    """Eigenvalue gaps are too small to classify parity per eigenspace."""


class TooSmallError(ReflapError):
    """The requested size is below the minimum the operation supports."""


class TooLargeError(ReflapError):
    """The graph exceeds the brute-force enumeration budget."""


class DisconnectedError(ReflapError):
    """The graph is disconnected; the Cheeger constant degenerates to zero.

    Carries a witness cut with zero crossing measure when one was found.
    """

    def __init__(self, message, cut=None):
        super().__init__(message)
        self.cut = cut


class LengthMismatchError(ReflapError):
    """A per-vertex vector has the wrong length."""
