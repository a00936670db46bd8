"""Closed-form moments of (a z + b)**(-n) on [-1, 1]."""
from fractions import Fraction
from math import comb

from ..errors import PoleOnInterval
from .logvalue import LogPolynomialValue
from .rational import to_rational


def moment(k, n, a, b):
    """Exact value of the integral of z**k (a z + b)**(-n) over [-1, 1].

    Substituting u = a z + b turns the integrand into a finite sum of powers
    of u; only the u**-1 term contributes a logarithm.
    """
    if k < 0 or n < 0:
        raise ValueError("moment needs k >= 0 and n >= 0")
    a, b = to_rational(a), to_rational(b)
    if n and (b - a) * (b + a) <= 0:
        raise PoleOnInterval(f"{a}*z + {b} vanishes on [-1, 1]")
    if not a:
        if not b and n:
            raise PoleOnInterval("zero weight")
        even = Fraction(2, k + 1) if k % 2 == 0 else Fraction(0)
        return LogPolynomialValue.rational(even / b ** n)
    lo, hi = b - a, b + a
    const = Fraction(0)
    log_coeff = Fraction(0)
    for i in range(k + 1):
        c = comb(k, i) * (-b) ** (k - i)
        e = i - n
        if e == -1:
            log_coeff += c
        else:
            const += c * (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)
    scale = 1 / a ** (k + 1)
    out = LogPolynomialValue.rational(const * scale)
    if log_coeff:
        out = out + LogPolynomialValue.log(hi / lo, log_coeff * scale)
    return out


def weighted_integral(p, n, a, b):
    """Integral of p(z) (a z + b)**(-n) over [-1, 1] for a polynomial p."""
    out = LogPolynomialValue()
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + moment(k, n, a, b) * c
    return out
