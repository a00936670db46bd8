"""Exact values of the form q0 + sum q_i * log(r_i1) * ... * log(r_ik).

Log arguments are stored factored into primes, so log 6 and log 2 + log 3
share one representation and an expression is zero exactly when all of its
coefficients vanish.  Signs are certified with interval arithmetic.
"""
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mpf
from mpmath.ctx_iv import MPIntervalContext

from ..errors import SignUndetermined
from .rational import fmt, to_rational

DEFAULT_MAX_PREC = 4096
PRECISION_LADDER = (53, 128, 256, 512, 1024, 2048, 4096)


def max_precision():
    """Cap on refinement bits; ``SASAKI_MAX_PREC`` overrides the default."""
    env = os.environ.get("SASAKI_MAX_PREC")
    return int(env) if env else DEFAULT_MAX_PREC


@lru_cache(maxsize=4096)
def _factor(n):
    from sympy import factorint
    return tuple(sorted(factorint(n).items()))


def _log_terms(r):
    """Prime decomposition of log r as {(p,): exponent}."""
    r = to_rational(r)
    if r <= 0:
        raise ValueError(f"log of non-positive rational {r}")
    out = {}
    for p, e in _factor(r.numerator):
        out[(p,)] = out.get((p,), 0) + e
    for p, e in _factor(r.denominator):
        out[(p,)] = out.get((p,), 0) - e
    return {k: Fraction(v) for k, v in out.items() if v}


class LogPolynomialValue:
    """Immutable element of Q[log 2, log 3, log 5, ...].

    ``_terms`` maps a sorted tuple of primes (a multiset of log factors) to
    its rational coefficient; the empty tuple holds the constant.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        for k, v in (terms or {}).items():
            v = to_rational(v)
            if v:
                k = tuple(sorted(k))
                t[k] = t.get(k, 0) + v
                if not t[k]:
                    del t[k]
        self._terms = t

    @classmethod
    def rational(cls, q):
        return cls({(): to_rational(q)})

    @classmethod
    def log(cls, r, coeff=1):
        """coeff * log(r)."""
        coeff = to_rational(coeff)
        return cls({k: coeff * v for k, v in _log_terms(r).items()})

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, LogPolynomialValue) else cls.rational(x)

    @property
    def constant(self):
        return self._terms.get((), Fraction(0))

    @property
    def terms(self):
        """Non-constant terms as (coefficient, log-argument tuple) pairs."""
        return [(v, k) for k, v in sorted(self._terms.items(), key=_key) if k]

    def is_zero(self):
        return not self._terms

    def is_rational(self):
        return all(not k for k in self._terms)

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("value involves logarithms")
        return self.constant

    def log_degree(self):
        return max((len(k) for k in self._terms), default=0)

    def __add__(self, other):
        other = LogPolynomialValue.coerce(other)
        t = dict(self._terms)
        for k, v in other._terms.items():
            t[k] = t.get(k, 0) + v
        return LogPolynomialValue(t)

    __radd__ = __add__

    def __neg__(self):
        return LogPolynomialValue({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-LogPolynomialValue.coerce(other))

    def __rsub__(self, other):
        return LogPolynomialValue.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LogPolynomialValue):
            c = to_rational(other)
            return LogPolynomialValue({k: c * v for k, v in self._terms.items()})
        t = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = tuple(sorted(k1 + k2))
                t[k] = t.get(k, 0) + v1 * v2
        return LogPolynomialValue(t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / to_rational(c))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LogPolynomialValue.rational(other)
        if not isinstance(other, LogPolynomialValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, v in sorted(self._terms.items(), key=_key):
            if not k:
                parts.append(fmt(v))
            else:
                logs = "*".join(f"log({p})" for p in k)
                parts.append(logs if v == 1 else f"{fmt(v)}*{logs}")
        return " + ".join(parts).replace("+ -", "- ")

    # numerics --------------------------------------------------------------
    def interval(self, prec):
        """Rigorous enclosure (lo, hi) as mpmath mpf endpoints at prec bits."""
        iv = MPIntervalContext()
        iv.prec = prec
        logs = {}
        acc = iv.mpf(0)
        for k, v in self._terms.items():
            term = iv.mpf(v.numerator) / iv.mpf(v.denominator)
            for p in k:
                if p not in logs:
                    logs[p] = iv.log(iv.mpf(p))
                term = term * logs[p]
            acc = acc + term
        lo, hi = acc._mpi_
        return mpf(lo), mpf(hi)

    def __float__(self):
        # climb until the enclosure pins down a double; cancellation between
        # large terms can eat far more than 80 bits
        for prec in _ladder(max(max_precision(), 4096)):
            lo, hi = self.interval(prec)
            mid = (lo + hi) / 2
            if hi - lo <= abs(mid) * 2.0 ** -60 or hi == lo:
                break
        return float(mid)

    def certified(self, max_prec=None):
        """(sign, midpoint, radius) with the sign proven by interval bounds.

        Raises SignUndetermined when the enclosure still contains 0 at the
        precision cap.
        """
        if not self._terms:
            return 0, 0.0, 0.0
        if self.is_rational():
            return (1 if self.constant > 0 else -1), float(self.constant), 0.0
        cap = max_prec or max_precision()
        lo = hi = None
        for prec in _ladder(cap):
            lo, hi = self.interval(prec)
            if lo > 0 or hi < 0:
                return (1 if lo > 0 else -1,) + _mid_err(lo, hi)
        raise SignUndetermined(f"sign of {self!r} undetermined at {cap} bits "
                               f"(enclosure [{float(lo)}, {float(hi)}])")

    def sign(self, max_prec=None):
        return self.certified(max_prec)[0]

    def to_json(self):
        return {"constant": fmt(self.constant),
                "terms": [{"coeff": fmt(v), "logs": [str(p) for p in k]}
                          for v, k in self.terms]}

    @classmethod
    def from_json(cls, obj):
        t = {(): to_rational(obj.get("constant", "0"))}
        for term in obj.get("terms", []):
            k = tuple(int(p) for p in term["logs"])
            t[k] = t.get(k, 0) + to_rational(term["coeff"])
        return cls(t)


def _mid_err(lo, hi):
    # full width plus one ulp of the midpoint: safe against the final rounding
    mid = float((lo + hi) / 2)
    return mid, float(hi - lo) + abs(mid) * 2.0 ** -52


def _key(item):
    return (len(item[0]), item[0])


def _ladder(cap):
    steps = [p for p in PRECISION_LADDER if p <= cap]
    p = PRECISION_LADDER[-1]
    while p * 2 <= cap:
        p *= 2
        steps.append(p)
    if not steps or steps[-1] < cap:
        steps.append(cap)
    return steps


@dataclass(frozen=True)
class LogRatio:
    """Exact quotient num/den of two log-polynomial values (den != 0)."""

    num: LogPolynomialValue
    den: LogPolynomialValue

    def as_rational(self):
        """The quotient as a Fraction if it is rational, else None."""
        if self.den.is_zero():
            raise ZeroDivisionError("LogRatio with zero denominator")
        if self.num.is_zero():
            return Fraction(0)
        k, dv = next(iter(self.den._terms.items()))
        q = self.num._terms.get(k, Fraction(0)) / dv
        return q if self.num == self.den * q else None

    def certified(self, max_prec=None):
        """(sign, midpoint, radius) of num/den."""
        if self.num.is_zero():
            return 0, 0.0, 0.0
        q = self.as_rational()
        if q is not None:
            return (q > 0) - (q < 0), float(q), 0.0
        cap = max_prec or max_precision()
        sn = self.num.sign(cap)
        sd = self.den.sign(cap)
        for prec in _ladder(cap):
            nlo, nhi = self.num.interval(prec)
            dlo, dhi = self.den.interval(prec)
            if (dlo > 0 or dhi < 0) and (nlo > 0 or nhi < 0):
                cands = [nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi]
                lo, hi = min(cands), max(cands)
                return (sn * sd,) + _mid_err(lo, hi)
        raise SignUndetermined("ratio enclosure did not separate from 0")

    def to_json(self, max_prec=None):
        s, mid, err = self.certified(max_prec)
        return {"num": self.num.to_json(), "den": self.den.to_json(),
                "float": mid, "err": err}
