"""Exception hierarchy shared by every module of the package."""


class StaircaseKitError(ValueError):
    """Base class for all errors raised by staircase_kit."""


# numerical semigroups
class NotCofinite(StaircaseKitError):
    pass


class NotAMember(StaircaseKitError):
    pass


class TableTooLarge(StaircaseKitError, OverflowError):
    """Raised instead of allocating membership tables beyond desk scale."""


# value ideals
class AmbientMismatch(StaircaseKitError):
    pass


class NotArithmeticFamily(StaircaseKitError):
    pass


class NoReductionFound(StaircaseKitError):
    pass


# staircases
class ZeroIdeal(StaircaseKitError):
    pass


class InfiniteRing(StaircaseKitError):
    pass


class RingMismatch(StaircaseKitError):
    pass


class NotCoprime(StaircaseKitError):
    pass


class RepresentationFailure(StaircaseKitError):
    pass


# reduction engine
class NotPrimaryForm(StaircaseKitError):
    pass


class TooFewGenerators(StaircaseKitError):
    pass


class HypothesisViolated(StaircaseKitError):
    pass


class NonTermination(StaircaseKitError):
    pass


# certificates
class MalformedCertificate(StaircaseKitError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)
