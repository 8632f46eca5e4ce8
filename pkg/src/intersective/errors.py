"""Exception types shared across the package."""


class IntersectiveError(Exception):
    """Base class for all package-specific errors."""


class SpecMismatch(IntersectiveError, ValueError):
    """Elements of two different fields (or rings) were combined."""


class DivisionByZero(IntersectiveError, ZeroDivisionError):
    """Inverse or division by the zero element."""


class BothZero(IntersectiveError, ValueError):
    """gcd(0, 0) requested."""


class ConstantInput(IntersectiveError, ValueError):
    """A nonconstant polynomial was required."""


class ZeroInput(IntersectiveError, ValueError):
    """Zero is not a valid input here (factorization, modulus, ...)."""


class NotPrime(IntersectiveError, ValueError):
    """A prime element was required."""


class ZeroPolynomial(IntersectiveError, ValueError):
    """The zero polynomial is not a valid input here."""


class RingMismatch(IntersectiveError, ValueError):
    """Operands live over different coefficient rings."""


class NotPrimitive(IntersectiveError, ValueError):
    """A primitive polynomial (unit content) was required."""


class InseparableFactor(IntersectiveError, ValueError):
    """An irreducible factor has zero derivative; the decision procedure
    requires every irreducible factor to be separable."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"inseparable irreducible factor: {factor}")


class ProductMismatch(IntersectiveError, ValueError):
    """A claimed factorization does not multiply back to the input."""


class ReducibleClaimedFactor(IntersectiveError, ValueError):
    """A claimed irreducible factor is in fact reducible."""


class CapExceeded(IntersectiveError, RuntimeError):
    """An enumeration would exceed the configured work cap."""


class WrongRing(IntersectiveError, ValueError):
    """Operation applies to the other coefficient ring only."""


class PolySyntaxError(IntersectiveError, ValueError):
    """Polynomial text could not be parsed; carries the 0-based offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


class UnknownSymbol(PolySyntaxError):
    """An identifier that is not legal in the selected ring."""


class EmptyInput(PolySyntaxError):
    """Empty polynomial text."""

    def __init__(self):
        super().__init__("empty input", 0)
