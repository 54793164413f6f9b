"""Exception types shared across the package."""


class HankelGammaError(Exception):
    pass


class NotDivisible(HankelGammaError):
    """Polynomial long division left a nonzero remainder."""


class DuplicateAbscissa(HankelGammaError):
    pass


class NonUnitConstantTerm(HankelGammaError):
    pass


class PartitionTooLong(HankelGammaError):
    pass


class TooManyArguments(HankelGammaError):
    pass


class NTooSmall(HankelGammaError):
    pass


class IndexOutOfRange(HankelGammaError):
    pass


class SingularSystem(HankelGammaError):
    pass


class EndpointIsRoot(HankelGammaError):
    pass


class IoFailure(HankelGammaError):
    pass


class MismatchReport(HankelGammaError):
    """Raised when two exact computations that should agree do not.

    Both sides are kept verbatim so the caller can print or persist them.
    """

    def __init__(self, label, lhs, rhs, detail=None):
        self.label = label
        self.lhs = lhs
        self.rhs = rhs
        self.detail = detail
        msg = f"{label}: lhs={lhs} rhs={rhs}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
