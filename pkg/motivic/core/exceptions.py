class MotivicError(Exception):
    """Base class of every error raised by the engine."""


class NonUnitConstantTerm(MotivicError, ArithmeticError):
    def __init__(self, constant):
        self.constant = constant
        super().__init__(f"Constant term {constant} is not a unit (expected 1 or -1).")


class NonIntegralResult(MotivicError, ArithmeticError):
    """
    An exact computation that must land in the integer ring did not.

    Raised by the rational Exp/Log routes and by exact polynomial division;
    for valid input this always signals an arithmetic bug.
    """

    def __init__(self, message: str, *, index: int | None = None):
        self.index = index
        if index is not None:
            message = f"{message} (coefficient of t^{index})"
        super().__init__(message)


class ConstantTermError(MotivicError, ValueError):
    def __init__(self, expected: int, found):
        self.expected = expected
        self.found = found
        super().__init__(f"Expected constant term {expected}, got {found}.")


class PolynomialSyntaxError(MotivicError, ValueError):
    pass


class MotiveSyntaxError(MotivicError, ValueError):
    pass
