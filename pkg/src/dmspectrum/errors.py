"""Exception hierarchy.

Every error raised by the library derives from :class:`DMError`, so callers
(the CLI in particular) can catch one type.
"""


class DMError(Exception):
    pass


# -- covering types ---------------------------------------------------------

class InvalidCoveringType(DMError, ValueError):
    """A tuple ``(d; a_1, ..., a_N)`` that is not a covering type.

    ``condition`` names the violated requirement.
    """

    condition = "invalid"

    def __init__(self, message, d=None, a=None):
        super().__init__(message)
        self.d = d
        self.a = a


class RejectDegree(InvalidCoveringType):
    condition = "degree"


class RejectRange(InvalidCoveringType):
    condition = "range"


class RejectGcd(InvalidCoveringType):
    condition = "gcd"


class RejectSum(InvalidCoveringType):
    condition = "sum"


class RejectLength(InvalidCoveringType):
    condition = "length"


class OutOfRange(DMError, ValueError):
    pass


class PreconditionFailed(DMError):
    pass


# -- lattice conditions / models --------------------------------------------

class BadWeightSum(DMError, ValueError):
    pass


class UnsupportedDimension(DMError):
    pass


class UnsupportedProfile(DMError):
    pass


class UnknownModel(DMError, KeyError):
    pass


class DimensionMismatch(DMError, ValueError):
    pass


class ModelMismatch(DMError, ValueError):
    pass


class NotASurface(DMError):
    pass


# -- spectrum ---------------------------------------------------------------

class NotUniformizingSignature(DMError):
    pass


class LatticeConditionFailed(DMError):
    pass


class InconsistentKnownEdges(DMError):
    pass
