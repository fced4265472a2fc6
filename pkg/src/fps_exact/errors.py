"""Exception types raised across the package."""


class NonInvertibleError(ArithmeticError):
    """A series with zero constant term was asked for a negative power or inverse."""


class OrderMismatchError(ValueError):
    """Two truncated series of different truncation orders were combined."""


class HypothesisViolation(ValueError):
    """Parameters fall outside the hypotheses under which an identity is stated."""


class UnknownIdentityError(KeyError):
    pass
