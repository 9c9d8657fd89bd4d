"""Exception hierarchy for the b-matching decomposition package."""


class BdmError(Exception):
    """Base class for all errors raised by :mod:`bdm`."""


class GraphError(BdmError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class NegativeCapacity(GraphError):
    pass


class UnknownEdgeId(BdmError, KeyError):
    pass


class NotABMatching(BdmError, ValueError):
    pass


class NotMaximumMatching(BdmError, ValueError):
    pass


class UnknownComponent(BdmError, KeyError):
    pass


class InconsistentDecomposition(BdmError, RuntimeError):
    """An internal invariant of a decomposition failed to hold."""


class RequiresEdgeClassification(BdmError, ValueError):
    pass


class NotAnIdeal(BdmError, ValueError):
    pass


class NotNormalized(BdmError, ValueError):
    pass


class NotVerifying(BdmError, ValueError):
    pass


class MalformedSet(BdmError, ValueError):
    """Some flexible component is split across ``Z`` in a forbidden way."""


class TooLarge(BdmError, ValueError):
    """Instance exceeds the brute-force oracle limits."""
