"""Futaki-type obstructions in the admissible setting.

All quantities drop overall positive constants (powers of 2 pi, base
volumes, factorials): values are faithful in sign and in ratios only.
"""
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .admissible import WeightParams, curvature_sum, fiber_polynomial
from .errors import (PoleOnInterval, SignUndetermined, SingularMoments,
                     SingularSystem, SymbolicEliminationOverflow)
from .exactalg import (LogPolynomialValue, LogRatio, Polynomial,
                       bareiss_solve, definite_integral, divide_exact, fmt, gcd,
                       isolate_roots, rational_roots, to_rational,
                       weighted_integral)
from .exactalg.roots import refine
from .solver import existence_verdict, solve_extremal

Z = Polynomial.z()
MAX_SYMBOLIC_DEGREE = 64
MAX_SYMBOLIC_BITS = 2 ** 16


@dataclass(frozen=True)
class AffineFn:
    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", to_rational(self.slope))
        object.__setattr__(self, "intercept", to_rational(self.intercept))

    @property
    def poly(self):
        return Polynomial.linear(self.slope, self.intercept)

    @classmethod
    def parse(cls, text):
        """From "slope,intercept"."""
        s, i = text.split(",")
        return cls(to_rational(s), to_rational(i))


@dataclass(frozen=True)
class SasakiWeight:
    """The weight (a z + b)**(-exponent)."""

    a: Fraction
    b: Fraction
    exponent: int

    def __call__(self, z):
        return (self.a * to_rational(z) + self.b) ** (-self.exponent)


class Sign(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    ZERO = "0"
    UNDETERMINED = "?"


_SIGNS = {1: Sign.POSITIVE, -1: Sign.NEGATIVE, 0: Sign.ZERO}


@dataclass(frozen=True)
class FutakiValue:
    """Exact value (LogPolynomialValue or LogRatio) with a certified float."""

    exact: object
    numeric: float
    err: float
    sign: Sign

    @classmethod
    def certify(cls, exact, max_prec=None, strict=True):
        try:
            s, mid, err = exact.certified(max_prec)
        except SignUndetermined:
            if strict:
                raise
            return cls(exact, float("nan"), float("inf"), Sign.UNDETERMINED)
        return cls(exact, mid, err, _SIGNS[s])

    def to_json(self):
        out = {"sign": self.sign.value, "float": self.numeric, "err": self.err}
        if isinstance(self.exact, LogRatio):
            out["num"] = self.exact.num.to_json()
            out["den"] = self.exact.den.to_json()
        else:
            out["exact"] = self.exact.to_json()
        return out


def _require_cone(w):
    if not w.b > abs(w.a):
        raise PoleOnInterval(f"b > |a| required (a={fmt(w.a)}, b={fmt(w.b)})")


def pairing(l1, l2, data, w, exponent):
    """Integral over [-1, 1] of l1 l2 (az+b)^(-exponent) p_c."""
    _require_cone(w)
    p = l1.poly * l2.poly * fiber_polynomial(data)
    return weighted_integral(p, exponent, w.a, w.b)


def _integral(p, weight):
    if isinstance(weight, SasakiWeight):
        return weighted_integral(p, weight.exponent, weight.a, weight.b)
    return LogPolynomialValue.rational(definite_integral(p * weight, -1, 1))


def _at(weight, z):
    return weight(z)


def sasaki_weight_pair(data, w):
    m = data.m
    return SasakiWeight(w.a, w.b, m + 1), SasakiWeight(w.a, w.b, m + 3)


def _quotient(num, den):
    r = LogRatio(num, den)
    q = r.as_rational()
    return q if q is not None else r


def extremal_affine_ibp(data, v, w):
    """(A, B) from integrating the weighted equation against 1 and z.

    The boundary conditions turn the left-hand side into boundary data, so
    the result does not depend on the profile.  Entries are exact values; a
    rational (A, B) is returned as Fractions, otherwise as LogRatio.
    """
    for weight in (v, w):
        if isinstance(weight, SasakiWeight):
            _require_cone(WeightParams(weight.a, weight.b))
    pc = fiber_polynomial(data)
    S = curvature_sum(data)
    m0 = _integral(pc, w)
    m1 = _integral(Z * pc, w)
    m2 = _integral(Z * Z * pc, w)
    bp = _at(v, 1) * pc(1)
    bm = _at(v, -1) * pc(-1)
    r1 = _integral(S, v) + 2 * bp + 2 * bm
    r2 = _integral(Z * S, v) + 2 * bp - 2 * bm
    det = m1 * m1 - m0 * m2
    if det.is_zero():
        raise SingularMoments("moment determinant vanishes")
    A = r1 * m1 - m0 * r2
    B = m1 * r2 - m2 * r1
    return _quotient(A, det), _quotient(B, det)


def _ell_ext(data, w, ell_ext):
    if ell_ext is not None:
        return ell_ext
    sol = solve_extremal(data, w)
    return AffineFn(sol.A, sol.B)


def c_K(data, w, ell_ext=None, max_prec=None):
    """Average transverse scalar curvature <l_ext, l_K> / <l_K, l_K>."""
    ell_ext = _ell_ext(data, w, ell_ext)
    ell_K = AffineFn(w.a, w.b)
    n = data.m + 3
    ratio = LogRatio(pairing(ell_ext, ell_K, data, w, n), pairing(ell_K, ell_K, data, w, n))
    return FutakiValue.certify(ratio, max_prec)


def futaki(data, w, ell_Z, ell_ext=None, max_prec=None, strict=True):
    """Positive multiple <l_K, l_K> * Fut_K(Z) of the contact Futaki invariant."""
    ell_ext = _ell_ext(data, w, ell_ext)
    ell_K = AffineFn(w.a, w.b)
    n = data.m + 3

    def pr(x, y):
        return pairing(x, y, data, w, n)

    det = pr(ell_ext, ell_Z) * pr(ell_K, ell_K) - pr(ell_ext, ell_K) * pr(ell_K, ell_Z)
    return FutakiValue.certify(det, max_prec, strict)


SCALAR_FLAT_CONE = "scalar-flat cone"
CSC = "csc"
NON_CSC = "extremal non-csc"


def csc_type(data, w, sol=None):
    """Classify the Reeb direction: non-CSC, CSC, or CSC with c_K = m(m+1)."""
    sol = sol or solve_extremal(data, w)
    if sol.A * w.b != sol.B * w.a:
        return NON_CSC
    lam = sol.B / w.b if w.b else sol.A / w.a
    return SCALAR_FLAT_CONE if lam == data.m * (data.m + 1) else CSC


def df_indicator(data, w, z0, extended=False):
    """Theta_ext(z0): sign-faithful Donaldson-Futaki indicator of the
    degeneration to the normal cone; the positive factor is not computed."""
    z0 = to_rational(z0)
    if not abs(z0) < 1:
        raise ValueError("z0 must lie in (-1, 1)")
    sol = solve_extremal(data, w, extended)
    return sol.F(z0) / sol.p_c(z0)


def double_root_defect_values(F, A, B, m):
    """(A^(m+2) F(-B/A), A^(m+1) F'(-B/A)) without division.

    When A = 0 the root sits at infinity and the defect is the pair of
    coefficients of z^(m+2) and z^(m+1).
    """
    A, B = to_rational(A), to_rational(B)
    if F.degree > m + 2:
        raise ValueError("deg F exceeds m + 2")
    if not A:
        return F.coeff(m + 2), F.coeff(m + 1)
    d0 = sum((c * (-B) ** i * A ** (m + 2 - i) for i, c in enumerate(F.coeffs)), Fraction(0))
    d1 = sum((i * c * (-B) ** (i - 1) * A ** (m + 2 - i)
              for i, c in enumerate(F.coeffs) if i), Fraction(0))
    return d0, d1


def double_root_defect(sol):
    return double_root_defect_values(sol.F, sol.A, sol.B, sol.m)


# CSC rays -------------------------------------------------------------------
@dataclass
class CscRay:
    """A Reeb direction a with D(a) = A(a) b - B(a) a = 0.

    ``a`` is exact when the root is rational; ``interval`` always isolates it.
    ``exists`` is the existence verdict at ``approximant``.
    """

    interval: tuple
    a: Fraction = None
    approximant: Fraction = None
    exists: bool = None

    def to_json(self):
        return {"a": None if self.a is None else fmt(self.a),
                "interval": [fmt(self.interval[0]), fmt(self.interval[1])],
                "approximant": fmt(self.approximant), "exists": self.exists}


@dataclass
class CscSearch:
    identically_zero: bool
    rays: list = field(default_factory=list)
    numerator: Polynomial = None
    method: str = "symbolic"

    def contains(self, a):
        a = to_rational(a)
        return any(r.a == a if r.a is not None else r.interval[0] <= a <= r.interval[1]
                   for r in self.rays)

    def to_json(self):
        if self.identically_zero:
            return "IdenticallyZero"
        return [r.to_json() for r in self.rays]


class _Guard:
    def __init__(self, max_degree, max_bits):
        self.max_degree, self.max_bits = max_degree, max_bits

    def __call__(self, x, y):
        q = divide_exact(x, y)
        if q.degree > self.max_degree:
            raise SymbolicEliminationOverflow(f"degree {q.degree} exceeds cap")
        ints, den = q.int_form()
        bits = max((abs(c).bit_length() for c in ints), default=0) + den.bit_length()
        if bits > self.max_bits:
            raise SymbolicEliminationOverflow(f"coefficient size {bits} bits exceeds cap")
        return q


def monomial_system(data, b):
    """The (m+5)x(m+5) system for (f_0..f_{m+2}, A, B) with entries in Q[a].

    Rows: coefficients z^0..z^m of L[F] - RHS = 0, then the four BCs.
    """
    b = to_rational(b)
    m = data.m
    pc = fiber_polynomial(data)
    S = curvature_sum(data)
    zpc = Z * pc
    n = m + 5
    P = Polynomial
    zero = P()
    rows, rhs = [], []
    for k in range(m + 1):
        row = [zero] * n
        for i in range(m + 3):
            if i == k:
                row[i] = row[i] + P((0, 0, (i - m - 1) * (i - m - 2)))
            elif i - 1 == k:
                row[i] = row[i] + P((0, 2 * b * i * (i - m - 2)))
            elif i - 2 == k:
                row[i] = row[i] + P((b * b * i * (i - 1),))
        row[m + 3] = P((zpc.coeff(k),))
        row[m + 4] = P((pc.coeff(k),))
        rows.append(row)
        rhs.append(P((b * b * S.coeff(k), 2 * b * S.coeff(k - 1), S.coeff(k - 2))))
    ones = [P((1,))] * (m + 3)
    alt = [P(((-1) ** i,)) for i in range(m + 3)]
    d1 = [P((i,)) for i in range(m + 3)]
    dm1 = [P((i if i % 2 else -i,)) for i in range(m + 3)]
    for coeffs, target in ((ones, 0), (alt, 0), (d1, -2 * pc(1)), (dm1, 2 * pc(-1))):
        rows.append(coeffs + [zero, zero])
        rhs.append(P((target,)))
    return rows, rhs


def symbolic_extremal_affine(data, b, max_degree=MAX_SYMBOLIC_DEGREE,
                             max_bits=MAX_SYMBOLIC_BITS):
    """(num_A, num_B, den) in Q[a] with A(a) = num_A/den, B(a) = num_B/den."""
    rows, rhs = monomial_system(data, b)
    one = Polynomial.constant(1)
    y, d = bareiss_solve(rows, rhs, exact_div=_Guard(max_degree, max_bits),
                         zero=Polynomial(), one=one)
    return y[-2], y[-1], d


def _csc_numerator(data, b, **caps):
    nA, nB, d = symbolic_extremal_affine(data, b, **caps)
    N = nA * b - Z * nB
    if N.is_zero():
        return N, d
    while True:
        g = gcd(N, d)
        if g.degree <= 0:
            return N.monic(), d
        N = divide_exact(N, g)


def _D(data, a, b):
    sol = solve_extremal(data, WeightParams(a, b))
    return sol.A * b - sol.B * a


def find_csc(data, b, search=None, max_degree=MAX_SYMBOLIC_DEGREE,
             max_bits=MAX_SYMBOLIC_BITS, width=None):
    """Reeb directions a in an open subinterval of (-b, b) along which the
    extremal affine function is proportional to a z + b.

    Solves the monomial boundary system with a as an indeterminate and
    isolates the roots of D(a) by Sturm sequences; past the size caps falls
    back to exact bisection on D.
    """
    b = to_rational(b)
    if not b > 0:
        raise ValueError("b must be positive")
    lo, hi = (-b, b) if search is None else (to_rational(search[0]), to_rational(search[1]))
    if not (-b <= lo < hi <= b):
        raise ValueError("search interval must lie inside (-b, b)")
    width = width or b / 2 ** 30
    try:
        N, d = _csc_numerator(data, b, max_degree=max_degree, max_bits=max_bits)
    except SymbolicEliminationOverflow:
        return _find_csc_bisection(data, b, lo, hi, width)
    if N.is_zero():
        return CscSearch(True, [], N)
    rays = []
    if N.degree > 0:
        exact = set(rational_roots(N))
        for iv in isolate_roots(N, lo, hi):
            if iv[0] == iv[1] and iv[0] in (lo, hi):
                continue
            root = iv[0] if iv[0] == iv[1] else next((r for r in exact if iv[0] < r <= iv[1]), None)
            if root is not None:
                iv = (root, root)
            else:
                iv = refine(N, iv, width)
                if iv[0] == iv[1]:
                    root = iv[0]
            rays.append(_ray(data, b, iv, root))
    return CscSearch(False, rays, N)


def _ray(data, b, iv, root):
    approx = root if root is not None else (iv[0] + iv[1]) / 2
    try:
        exists = existence_verdict(solve_extremal(data, WeightParams(approx, b))).exists
    except SingularSystem:
        exists = None
    return CscRay(iv, root, approx, exists)


def _find_csc_bisection(data, b, lo, hi, width, samples=None):
    samples = samples or int(os.environ.get("SASAKI_CSC_SAMPLES", 256))
    pts = [lo + (hi - lo) * Fraction(i, samples + 1) for i in range(1, samples + 1)]
    vals = [_D(data, a, b) for a in pts]
    if all(v == 0 for v in vals):
        return CscSearch(True, [], None, "bisection")
    rays = []
    for i, (a, v) in enumerate(zip(pts, vals)):
        if v == 0:
            rays.append(_ray(data, b, (a, a), a))
        elif i + 1 < len(pts) and vals[i + 1] and (v > 0) != (vals[i + 1] > 0):
            l, r, sl = a, pts[i + 1], v > 0
            root = None
            while r - l > width:
                mid = (l + r) / 2
                dm = _D(data, mid, b)
                if dm == 0:
                    root = mid
                    break
                if (dm > 0) == sl:
                    l = mid
                else:
                    r = mid
            rays.append(_ray(data, b, (root, root) if root is not None else (l, r), root))
    return CscSearch(False, rays, None, "bisection")
