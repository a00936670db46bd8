"""Rational functions num/den over Q in lowest terms with monic den."""
from fractions import Fraction

from .polynomial import Polynomial, divide_exact, gcd
from .rational import to_rational


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Polynomial.coerce(num)
        den = Polynomial.constant(1) if den is None else Polynomial.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial.constant(1)
            return
        g = gcd(num, den)
        if g.degree > 0:
            num, den = divide_exact(num, g), divide_exact(den, g)
        lead = den.lead
        self.num, self.den = num / lead, den / lead

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return RationalFunction(self.num * to_rational(other), self.den)
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return RationalFunction(self.num, self.den * to_rational(other))
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def derivative(self):
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(),
                                self.den * self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self):
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}
