"""Exception types shared across the package."""


class OplabError(Exception):
    """Base class for every error raised by oplab."""


class ZeroConstantTerm(OplabError, ZeroDivisionError):
    """Raised when inverting a series whose constant coefficient is zero."""


class InvalidExponent(OplabError, ValueError):
    """Raised for a non-positive substitution exponent q -> q^m."""


class EmptyPartition(OplabError, ValueError):
    """The combinatorial crank is undefined on the empty partition."""


class InternalIdentityViolation(OplabError, AssertionError):
    """Two independent routes to the same series disagreed.

    This always signals an implementation bug, never bad user input.
    """

    def __init__(self, what, index, left, right):
        self.what = what
        self.index = index
        self.left = left
        self.right = right
        super().__init__(f"{what}: routes disagree at q^{index} ({left} != {right})")
