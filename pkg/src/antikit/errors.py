"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes):

* ``InputError`` -- the input itself is malformed or out of range (exit 2).
* ``Refusal`` -- the input is well formed but the requested object does not
  exist for it, e.g. a shelling of an infeasible set (exit 1).
"""


class AntikitError(Exception):
    """Base class for every error raised by this package."""


class InputError(AntikitError, ValueError):
    pass


class Refusal(AntikitError):
    pass


# split graph construction
class OverlappingPartition(InputError):
    pass


class UnknownVertex(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IllegalEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class FormatError(InputError):
    """A text file could not be parsed."""


class NotIndependentVertex(InputError):
    pass


class GroundSetTooLarge(InputError):
    pass


class NormalizationRequired(InputError):
    pass


class ForcedNotClosed(InputError):
    pass


class InvalidDelta(InputError):
    pass


class UnknownElement(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# refusals
class NotFeasible(Refusal):
    pass


class NotAnAntimatroid(Refusal):
    pass


class FullPowerSet(Refusal):
    """The family is 2^V; several split graphs generate it."""


class NotSplitGraph(Refusal):
    pass
