"""Exception types shared across the package."""


class TckError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(TckError):
    """Input triple rejected; maps to CLI exit code 2."""


class NotSorted(ValidationError):
    pass


class GcdNotOne(ValidationError):
    pass


class NotMinimal(ValidationError):
    """One generator lies in the semigroup of the other two.

    The offending generator is named in the message and stored in
    ``redundant`` as one of "n1", "n2", "n3".
    """

    def __init__(self, message: str, redundant: str | None = None):
        super().__init__(message)
        self.redundant = redundant


class InternalInconsistency(TckError):
    """A structural identity that must hold by theory failed at runtime."""


class NoSolution(InternalInconsistency):
    """The homogeneous-coefficient linear system has no positive integer
    solution; signals a misclassified case."""


class ZeroVector(TckError):
    pass


class Untyped(TckError):
    """Lattice vector does not have a single variable isolated on one side."""


class EmptyInterval(TckError):
    pass


class DegenerateDelta(TckError):
    """delta2 <= 0 where the index-set iteration divides by it."""


class CapTooSmall(TckError):
    """A reduction needed during basis completion was truncated by the
    degree cap."""


class CapExceeded(TckError):
    """Membership or equality query outside the certified degree range."""


class NotGroebner(TckError):
    """Generator set failed Buchberger certification."""


class TooManyGenerators(TckError):
    pass


class Unsupported(TckError):
    pass
