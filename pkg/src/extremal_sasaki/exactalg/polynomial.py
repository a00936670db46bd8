"""Univariate polynomials with exact rational coefficients."""
from fractions import Fraction
from math import lcm

from ..errors import NotDivisible, ZeroScale
from . import _kernels as K
from .rational import fmt, to_rational


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``z**i``.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs", "_ints")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._ints = None

    # construction ----------------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def z(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def linear(cls, slope, intercept):
        return cls((intercept, slope))

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-to_rational(r), 1))
        return p

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, Polynomial) else cls.constant(to_rational(x))

    # basic properties ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def int_form(self):
        """(integer coefficients, positive common denominator)."""
        if self._ints is None:
            d = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
            self._ints = ([c.numerator * (d // c.denominator) for c in self.coeffs], d)
        return self._ints

    def primitive_ints(self):
        """Primitive integer polynomial with positive lead, same roots."""
        return K.primitive(self.int_form()[0])

    @classmethod
    def from_ints(cls, ints, den=1):
        return cls([Fraction(c, den) for c in ints])

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = Polynomial.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_rational(other)
            return Polynomial([c * x for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        ia, da = self.int_form()
        ib, db = other.int_form()
        return Polynomial.from_ints(K.mul(ia, ib), da * db)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = to_rational(c)
        return Polynomial([x / c for x in self.coeffs])

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Polynomial.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        x = to_rational(x)
        if not self.coeffs:
            return Fraction(0)
        ints, d = self.int_form()
        v = K.horner_hom(ints, x.numerator, x.denominator)
        return Fraction(v, d * x.denominator ** self.degree)

    def sign_at(self, x):
        x = to_rational(x)
        return K.sign_at(self.int_form()[0], x.numerator, x.denominator)

    def compose(self, q):
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        q = [Fraction(0)] * (dq + 1)
        lb = other.lead
        db = other.degree
        for k in range(dq, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    r[k + j] -= c * bj
        return Polynomial(q), Polynomial(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        return self / self.lead if self.coeffs else self

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self):
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        return f"Polynomial([{', '.join(fmt(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(fmt(c) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def to_strings(self):
        return [fmt(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items):
        return cls([to_rational(s) for s in items])


ONE = Polynomial.constant(1)
Z = Polynomial.z()


def differentiate(p):
    return p.derivative()


def definite_integral(p, lo, hi):
    """Exact integral of p over [lo, hi]."""
    P = p.antiderivative()
    return P(hi) - P(lo)


def divide_exact(num, den):
    """Quotient num/den, raising NotDivisible on a nonzero remainder."""
    q, r = num.divmod(den)
    if not r.is_zero():
        raise NotDivisible(f"{num} is not divisible by {den} (remainder {r})")
    return q


def shift_basis(p, a, b):
    """Coefficients q_s with p(z) = sum q_s (a z + b)**s."""
    a = to_rational(a)
    b = to_rational(b)
    if not a:
        raise ZeroScale("shift_basis needs a nonzero scale a")
    # z = (u - b)/a
    q = p.compose(Polynomial((-b / a, 1 / a)))
    out = list(q.coeffs)
    return out + [Fraction(0)] * (len(p.coeffs) - len(out))


def from_shift_basis(q, a, b):
    """Inverse of shift_basis: expand sum q_s (a z + b)**s."""
    return Polynomial(q).compose(Polynomial((to_rational(b), to_rational(a))))


def gcd(p, q):
    """Monic gcd over Q (zero only if both are zero)."""
    while not q.is_zero():
        p, q = q, p % q
        if not q.is_zero():
            q = q.monic()
    return p.monic()


def squarefree_part(p):
    """p / gcd(p, p') (monic)."""
    g = gcd(p, p.derivative())
    return divide_exact(p, g).monic()
