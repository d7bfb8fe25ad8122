"""Exception types shared across the package."""


class TreextremalError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TreextremalError, ValueError):
    """Malformed textual input (degree string, edge list, y-vector)."""


class NotATreeSequence(TreextremalError, ValueError):
    """Degree sequence cannot be realized by any tree."""


class InvalidTree(TreextremalError, ValueError):
    """Edge set does not describe a tree on the stated vertex count."""


class LengthMismatch(TreextremalError, ValueError):
    """Pruefer sequence length is not n - 2."""


class LabelOutOfRange(TreextremalError, ValueError):
    """Pruefer sequence entry outside 0..n-1."""


class VertexOutOfRange(TreextremalError, IndexError):
    """Vertex argument does not name a vertex of the tree."""


class IndexOutOfRange(TreextremalError, IndexError):
    """Spine index outside the valid range for the caterpillar."""


class EmptySpine(TreextremalError, ValueError):
    """Caterpillar construction needs at least one spine vertex."""


class NoInternalVertices(TreextremalError, ValueError):
    """Caterpillar enumeration needs k >= 1 internal vertices."""


class TooLarge(TreextremalError, ValueError):
    """Input exceeds the hard guard of the brute-force oracle."""


class BudgetExceeded(TreextremalError, RuntimeError):
    """Predicted enumeration cost exceeds the configured budget.

    ``predicted`` carries the predicted labeled-tree (or permutation) count
    so callers can report how far over budget the request was.
    """

    def __init__(self, message: str, predicted: int):
        super().__init__(message)
        self.predicted = predicted


class WrongK(TreextremalError, ValueError):
    """Closed form or trichotomy called with an unsupported internal count."""


class ClosedFormUnavailable(TreextremalError, ValueError):
    """No closed form exists for the requested objective/degree sequence."""


class NotApplicable(TreextremalError, ValueError):
    """Branch-shift preconditions do not hold for the given tree/vertices."""
