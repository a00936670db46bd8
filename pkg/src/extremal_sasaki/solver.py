"""Exact solution of the extremal and (v, w)-weighted boundary value problems.

The unknown momentum profile enters through F = p_c * Theta (Sasaki weights)
or G = v * p_c * Theta (polynomial weights).  Both are polynomials, so every
object produced here is exact.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .admissible import (EXTENDED_DOMAIN, curvature_sum, data_from_json,
                         data_to_json, fiber_polynomial, validate,
                         weight_from_json, weight_to_json)
from .errors import (DegenerateExtremalAffine, ExtremalError, NonPositiveWeight,
                     ValidationError)
from .exactalg import (Polynomial, RationalFunction, divide_exact, fmt,
                       from_shift_basis, gcd, is_positive_on_closed,
                       isolate_roots, positivity_certificate, shift_basis,
                       solve_rational, to_rational)

Z = Polynomial.z()
ONE_MINUS_Z2 = Polynomial((1, 0, -1))


class Mode(str, Enum):
    EIGEN = "eigen"
    DOUBLEINT = "doubleint"


@dataclass(frozen=True)
class ExtremalSolution:
    """F = p_c * Theta_ext together with the extremal affine function A z + B."""

    F: Polynomial
    A: Fraction
    B: Fraction
    mode: Mode
    data: object
    weight: object
    warnings: tuple = ()

    @property
    def m(self):
        return self.data.m

    @property
    def p_c(self):
        return fiber_polynomial(self.data)

    @property
    def profile_numerator(self):
        return self.F

    @property
    def boundary_weight(self):
        """The factor multiplying Theta'(+-1) in the numerator's slopes."""
        return self.p_c

    def boundary_residuals(self):
        return _bc_residuals(self.F, self.p_c, self.p_c)


@dataclass(frozen=True)
class WeightedSolution:
    """G = v * p_c * Theta for polynomial weights (v, w).

    ``residuals`` lists G(1), G(-1), G'(1) + 2 v p_c(1), G'(-1) - 2 v p_c(-1);
    all vanish unless (A, B) were forced.
    """

    G: Polynomial
    A: Fraction
    B: Fraction
    v: Polynomial
    w: Polynomial
    data: object
    forced: bool = False
    residuals: tuple = (0, 0, 0, 0)

    @property
    def m(self):
        return self.data.m

    @property
    def p_c(self):
        return fiber_polynomial(self.data)

    @property
    def profile_numerator(self):
        return self.G

    @property
    def boundary_weight(self):
        return self.v * self.p_c

    def boundary_residuals(self):
        return _bc_residuals(self.G, self.v * self.p_c, self.p_c)


def _bc_residuals(F, vp, _pc):
    dF = F.derivative()
    return (F(1), F(-1), dF(1) + 2 * vp(1), dF(-1) - 2 * vp(-1))


def _double_integral(p):
    return p.antiderivative().antiderivative()


def _solve_boundary(P0, basis, vp):
    """Coefficients x with F = P0 + sum x_k basis_k meeting the four BCs.

    F(+-1) = 0 and F'(+-1) = -+2 vp(+-1).
    """
    d0 = P0.derivative()
    dbasis = [b.derivative() for b in basis]
    M = [[b(1) for b in basis], [b(-1) for b in basis],
         [db(1) for db in dbasis], [db(-1) for db in dbasis]]
    rhs = [-P0(1), -P0(-1), -2 * vp(1) - d0(1), 2 * vp(-1) - d0(-1)]
    return solve_rational(M, rhs)


def apply_operator(F, a, b, m):
    """L[F] = (az+b)^2 F'' - 2a(m+1)(az+b) F' + a^2 (m+1)(m+2) F."""
    f = Polynomial.linear(a, b)
    return (f * f * F.derivative().derivative()
            - f * F.derivative() * (2 * a * (m + 1))
            + F * (a * a * (m + 1) * (m + 2)))


def eigen_particular(R, a, b, m):
    """Particular solution of L[F] = R for deg R <= m, a != 0."""
    q = shift_basis(R, a, b)
    if len(q) > m + 1:
        raise ExtremalError(f"source of degree {R.degree} exceeds m = {m}")
    coeffs = [qs / (a * a * (s - m - 1) * (s - m - 2)) for s, qs in enumerate(q)]
    return from_shift_basis(coeffs, a, b)


def _check(data, w, extended):
    report = validate(data, w, extended)
    report.raise_for_violations()
    return tuple(report.warnings)


def solve_extremal(data, w, extended=False):
    """Solve the extremal boundary value problem for Reeb weights (a, b).

    Raises ValidationError for inadmissible input and SingularSystem when
    the 4x4 boundary system degenerates.
    """
    warnings = _check(data, w, extended)
    a, b, m = w.a, w.b, data.m
    pc = fiber_polynomial(data)
    S = curvature_sum(data)
    f = w.affine
    if a:
        P0 = eigen_particular(S * f * f, a, b, m)
        PA = eigen_particular(Z * pc, a, b, m)
        PB = eigen_particular(pc, a, b, m)
        basis = [f ** (m + 1), f ** (m + 2), -PA, -PB]
        mode = Mode.EIGEN
    else:
        P0 = _double_integral(S)
        PA = _double_integral(Z * pc) / (b * b)
        PB = _double_integral(pc) / (b * b)
        basis = [Polynomial.constant(1), Z, -PA, -PB]
        mode = Mode.DOUBLEINT
    x = _solve_boundary(P0, basis, pc)
    F = P0 + sum((bk * xk for bk, xk in zip(basis, x)), Polynomial())
    return ExtremalSolution(F, x[2], x[3], mode, data, w, warnings)


def extremal_rhs(data, w, A, B):
    """S (az+b)^2 - (Az+B) p_c."""
    f = w.affine
    return curvature_sum(data) * f * f - Polynomial.linear(A, B) * fiber_polynomial(data)


def ode_residual(sol):
    """L[F] - RHS(A, B); the zero polynomial for a genuine solution."""
    w = sol.weight
    return apply_operator(sol.F, w.a, w.b, sol.m) - extremal_rhs(sol.data, w, sol.A, sol.B)


def solve_weighted(data, v, w, A_B=None):
    """Solve (v p_c Theta)'' = v S - (Az+B) w p_c with the four BCs.

    With ``A_B`` given, (A, B) are forced, only the integration constants are
    fitted to G(+-1) = 0, and the slope residuals are reported.
    """
    validate(data).raise_for_violations()
    v, w = Polynomial.coerce(v), Polynomial.coerce(w)
    if not is_positive_on_closed(v, -1, 1):
        raise NonPositiveWeight("v must be positive on [-1, 1]")
    if A_B is None and not is_positive_on_closed(w, -1, 1):
        raise NonPositiveWeight("w must be positive on [-1, 1]")
    pc = fiber_polynomial(data)
    S = curvature_sum(data)
    P0 = _double_integral(v * S)
    PA = _double_integral(Z * w * pc)
    PB = _double_integral(w * pc)
    one = Polynomial.constant(1)
    if A_B is None:
        x = _solve_boundary(P0, [one, Z, -PA, -PB], v * pc)
        c0, c1, A, B = x
        G = P0 + one * c0 + Z * c1 - PA * A - PB * B
        return WeightedSolution(G, A, B, v, w, data)
    A, B = (to_rational(t) for t in A_B)
    base = P0 - PA * A - PB * B
    c0, c1 = solve_rational([[1, 1], [1, -1]], [-base(1), -base(-1)])
    G = base + one * c0 + Z * c1
    sol = WeightedSolution(G, A, B, v, w, data, forced=True)
    return WeightedSolution(G, A, B, v, w, data, True, sol.boundary_residuals())


def weighted_residual(sol):
    """G'' - (v S - (Az+B) w p_c)."""
    rhs = sol.v * curvature_sum(sol.data) - Polynomial.linear(sol.A, sol.B) * sol.w * sol.p_c
    return sol.G.derivative().derivative() - rhs


def theta_profile(sol):
    """Theta = F / p_c (or G / (v p_c)) in lowest terms."""
    return RationalFunction(sol.profile_numerator, sol.boundary_weight)


@dataclass
class ExistenceReport:
    """Verdict on positivity of Theta on (-1, 1).

    ``deflated`` is the numerator divided by (1 - z^2); ``exists`` holds iff it
    is positive on the closed interval [-1, 1].
    """

    exists: bool
    deflated: Polynomial
    interior_roots: list = field(default_factory=list)
    double_root_flag: bool = False
    witness: Fraction = None

    def to_json(self):
        return {"exists": self.exists,
                "deflated": self.deflated.to_strings(),
                "interior_roots": [[fmt(l), fmt(r)] for l, r in self.interior_roots],
                "double_root": self.double_root_flag,
                "witness": None if self.witness is None else fmt(self.witness)}


def existence_verdict(sol):
    res = sol.boundary_residuals()
    if any(res):
        raise ExtremalError(f"boundary conditions violated: {res}")
    F = sol.profile_numerator
    Q = divide_exact(F, ONE_MINUS_Z2)
    cert = positivity_certificate(Q, -1, 1)
    roots = [] if cert.positive else _open_roots(Q)
    g = gcd(F, F.derivative())
    double = g.degree > 0 and _open_root(g)
    return ExistenceReport(cert.positive, Q, roots, double, cert.witness)


def _open_roots(g):
    # isolating intervals hold their root in (l, r] and are degenerate only
    # for rational roots, so just the points +-1 lie on the boundary
    return [iv for iv in isolate_roots(g, -1, 1) if iv not in ((-1, -1), (1, 1))]


def _open_root(g):
    return bool(_open_roots(g))


def scalar_curvature_profile(data, w, theta):
    """Weighted scalar curvature of the Calabi-ansatz metric with profile theta.

    Equals A z + B exactly when theta is the extremal profile.
    """
    theta = RationalFunction.coerce(theta)
    a, m = w.a, data.m
    pc = fiber_polynomial(data)
    f = RationalFunction(w.affine)
    G = theta * pc
    dG = G.derivative()
    LG = f * f * dG.derivative() - f * dG * (2 * a * (m + 1)) + G * (a * a * (m + 1) * (m + 2))
    return (f * f * curvature_sum(data) - LG) / RationalFunction(pc)


def sasaki_weights(data, w):
    """(v, w) = ((az+b)^(-m-1), (az+b)^(-m-3)) as rational functions."""
    f = w.affine
    m = data.m
    return RationalFunction(1, f ** (m + 1)), RationalFunction(1, f ** (m + 3))


def perturbation_pair(data, v, w, sol, t):
    """Perturbed profile and weight keeping the extremal affine function.

    Theta_t = Theta - t (1-z^2)^2 (Az+B)^3 and w_t = w + t w~ solve the weighted
    equation with the same (A, B); the identity is checked before returning.
    """
    t = to_rational(t)
    A, B = sol.A, sol.B
    if not A and not B:
        raise DegenerateExtremalAffine("A = B = 0: the perturbation is trivial")
    v, w = RationalFunction.coerce(v), RationalFunction.coerce(w)
    pc = fiber_polynomial(data)
    ell = Polynomial.linear(A, B)
    bump = ONE_MINUS_Z2 ** 2 * ell ** 3
    theta = theta_profile(sol)
    theta_t = theta - RationalFunction(bump) * t
    vpb = v * bump * pc
    w_tilde = vpb.derivative().derivative() / RationalFunction(ell * pc)
    w_t = w + w_tilde * t
    lhs = (v * pc * theta_t).derivative().derivative()
    rhs = v * curvature_sum(data) - w_t * (ell * pc)
    if lhs != rhs:
        raise ExtremalError("perturbed weights fail the weighted extremal identity")
    d = theta_t.derivative()
    if (theta_t(1), theta_t(-1), d(1), d(-1)) != (0, 0, -2, 2):
        raise ExtremalError("perturbed profile violates the boundary conditions")
    return theta_t, w_t


# JSON -------------------------------------------------------------------------
def solution_to_json(sol, report=None):
    out = {"F": sol.F.to_strings(), "A": fmt(sol.A), "B": fmt(sol.B),
           "mode": sol.mode.value,
           "config": {**data_to_json(sol.data), "weight": weight_to_json(sol.weight),
                      "extended": EXTENDED_DOMAIN in sol.warnings}}
    if sol.warnings:
        out["warnings"] = list(sol.warnings)
    if report is not None:
        out["exists"] = report.exists
        out["interior_roots"] = [[fmt(l), fmt(r)] for l, r in report.interior_roots]
    return out


def solution_from_json(obj):
    """Rebuild and re-validate a solution emitted by ``solution_to_json``.

    Raises ValidationError unless the boundary conditions and the ODE hold
    exactly for the stored coefficients.
    """
    cfg = obj["config"]
    data = data_from_json(cfg)
    w = weight_from_json(cfg["weight"])
    warnings = _check(data, w, bool(cfg.get("extended", False)))
    sol = ExtremalSolution(Polynomial.from_strings(obj["F"]), to_rational(obj["A"]),
                           to_rational(obj["B"]), Mode(obj["mode"]), data, w, warnings)
    if any(sol.boundary_residuals()):
        raise ValidationError(["stored F violates the boundary conditions"])
    if not ode_residual(sol).is_zero():
        raise ValidationError(["stored F does not solve the extremal equation"])
    return sol
