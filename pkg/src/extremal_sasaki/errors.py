"""Exception hierarchy shared by all modules."""


class ExtremalError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(ExtremalError):
    pass


class ZeroScale(ExtremalError):
    pass


class ZeroPolynomial(ExtremalError):
    pass


class PoleOnInterval(ExtremalError):
    pass


class SignUndetermined(ExtremalError):
    pass


class ValidationError(ExtremalError):
    """Admissible data or weight parameters violate a constraint.

    ``violations`` carries the individual messages.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SingularSystem(ExtremalError):
    pass


class NonPositiveWeight(ExtremalError):
    pass


class DegenerateExtremalAffine(ExtremalError):
    pass


class SingularMoments(ExtremalError):
    pass


class SymbolicEliminationOverflow(ExtremalError):
    pass
