"""Real-root certification on intervals via Sturm sequences."""
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ZeroPolynomial
from . import _kernels as K
from .polynomial import Polynomial, divide_exact, gcd, squarefree_part
from .rational import to_rational

# guard on rational-root candidate enumeration (bits of the extreme coefficients)
_MAX_DIVISOR_BITS = 96


def _chain(p):
    if p.is_zero():
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    return K.sturm_chain(squarefree_part(p).primitive_ints())


def _count(chain, lo, hi):
    return (K.variations(chain, lo.numerator, lo.denominator)
            - K.variations(chain, hi.numerator, hi.denominator))


def sturm_count(p, lo, hi):
    """Number of distinct real roots of p in (lo, hi].

    p is reduced to its square-free part first, so repeated roots count once.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    if lo >= hi:
        raise ValueError("sturm_count needs lo < hi")
    return _count(_chain(p), lo, hi)


def count_closed(p, lo, hi):
    """Distinct real roots in [lo, hi]."""
    lo, hi = to_rational(lo), to_rational(hi)
    return sturm_count(p, lo, hi) + (p(lo) == 0)


def isolate_roots(p, lo, hi):
    """Isolating intervals for the distinct roots of p in [lo, hi].

    Returns sorted (l, r) pairs of Fractions; each closed interval holds
    exactly one root, and l == r exactly when the root is that rational.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    chain = _chain(p)
    sf = Polynomial.from_ints(chain[0])
    out = []
    if sf(lo) == 0:
        out.append((lo, lo))
    stack = [(lo, hi, _count(chain, lo, hi))]
    found = []
    while stack:
        l, r, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append((r, r) if sf(r) == 0 else (l, r))
            continue
        mid = (l + r) / 2
        stack.append((l, mid, _count(chain, l, mid)))
        stack.append((mid, r, _count(chain, mid, r)))
    out.extend(sorted(found))
    return out


def refine(p, interval, width):
    """Bisect an isolating interval of the square-free p down to width."""
    l, r = interval
    if l == r:
        return interval
    sl = p.sign_at(l)
    while r - l > width:
        mid = (l + r) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return (mid, mid)
        if sl == 0 or sm == sl:
            if sl == 0:
                # root at the left end is excluded by half-open counting
                if sturm_count(p, l, mid):
                    r = mid
                else:
                    l, sl = mid, sm
            else:
                l, sl = mid, sm
        else:
            r = mid
    return (l, r)


def _divisors(n):
    from sympy import divisors
    return divisors(abs(n))


def rational_roots(p):
    """All rational roots of p (distinct, sorted), by the rational root test.

    Coefficients beyond the enumeration guard make this return only the
    obvious root 0; callers treat the result as a partial list then.
    """
    if p.is_zero():
        raise ZeroPolynomial("rational roots of the zero polynomial")
    c = squarefree_part(p).primitive_ints()
    roots = set()
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    c = c[k:]
    if len(c) <= 1:
        return sorted(roots)
    if max(abs(c[0]), abs(c[-1])).bit_length() > _MAX_DIVISOR_BITS:
        return sorted(roots)
    for num in _divisors(c[0]):
        for den in _divisors(c[-1]):
            for s in (num, -num):
                if K.horner_hom(c, s, den) == 0:
                    roots.add(Fraction(s, den))
    return sorted(roots)


@dataclass
class PositivityCertificate:
    """Outcome of a closed-interval positivity test.

    ``witness`` is a rational point with p(witness) <= 0 whenever
    ``positive`` is False and such a rational point could be exhibited; it
    can only be missing when p touches zero at irrational points without
    changing sign.
    """

    positive: bool
    lo: Fraction
    hi: Fraction
    roots: list = field(default_factory=list)
    witness: Fraction = None


def positivity_certificate(p, lo, hi):
    lo, hi = to_rational(lo), to_rational(hi)
    if p.is_zero():
        raise ZeroPolynomial("positivity of the zero polynomial")
    if lo > hi:
        raise ValueError("empty interval")
    for x in (lo, hi, (lo + hi) / 2):
        if p.sign_at(x) <= 0:
            return PositivityCertificate(False, lo, hi, isolate_roots(p, lo, hi) if lo < hi else [], x)
    if lo == hi:
        return PositivityCertificate(True, lo, hi)
    roots = isolate_roots(p, lo, hi)
    if not roots:
        return PositivityCertificate(True, lo, hi)
    return PositivityCertificate(False, lo, hi, roots, _find_witness(p, roots))


def _find_witness(p, roots):
    sf = squarefree_part(p)
    for l, r in roots:
        if l == r:
            return l
    # odd-multiplicity roots flip the sign: refining exposes a negative point
    width = max(r - l for l, r in roots)
    for _ in range(200):
        for l, r in roots:
            for x in (l, r, (l + r) / 2):
                if p.sign_at(x) <= 0:
                    return x
        width /= 2
        roots = [refine(sf, iv, width) for iv in roots]
        for l, r in roots:
            if l == r:
                return l
        if all(p.sign_at(l) > 0 and p.sign_at(r) > 0 for l, r in roots):
            break
    # only even-multiplicity roots remain; they are roots of gcd(p, p')
    g = gcd(p, p.derivative())
    if g.degree > 0:
        for x in rational_roots(g):
            if any(l <= x <= r for l, r in roots):
                return x
    return None


def is_positive_on_closed(p, lo, hi):
    """True iff p > 0 everywhere on [lo, hi]."""
    return positivity_certificate(p, lo, hi).positive


def multiplicity_polynomial(p):
    """gcd(p, p'): its roots are exactly the repeated roots of p."""
    return gcd(p, p.derivative())


__all__ = ["sturm_count", "count_closed", "isolate_roots", "refine",
           "rational_roots", "PositivityCertificate", "positivity_certificate",
           "is_positive_on_closed", "multiplicity_polynomial", "divide_exact"]
