"""Exception types raised across topolab."""


class TopologyError(ValueError):
    """Base class for malformed-input errors."""


class NotATopology(TopologyError):
    pass


class TooLarge(TopologyError):
    pass


class GroundSetMismatch(TopologyError):
    pass


class NotPiCompatible(TopologyError):
    pass


class NotOpen(TopologyError):
    pass


class EmptyInput(TopologyError):
    pass


class NOutOfRange(TopologyError):
    pass


class UnknownTheorem(TopologyError):
    pass


class UnknownPredicate(TopologyError):
    pass


class UnsupportedPair(TopologyError):
    pass


class SizeMismatch(TopologyError):
    pass


class EmptyBase(TopologyError):
    pass


class PreconditionFailed(TopologyError):
    pass


class ParseError(TopologyError):
    pass


class CheckFailed(AssertionError):
    """A property guaranteed by a theorem did not hold on a concrete instance."""
