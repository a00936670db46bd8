"""Admissible fibration data, Reeb weight parameters and validation."""
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .exactalg import Polynomial, fmt, to_rational

EXTENDED_DOMAIN = "ExtendedDomain"


@dataclass(frozen=True)
class BaseFactor:
    """A CSC Kaehler factor B_j of the base.

    dim is the complex dimension, scal its constant scalar curvature, p the
    twist degree and c the class constant (p z + c > 0 on [-1, 1]).
    """

    dim: int
    scal: Fraction
    p: int
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scal", to_rational(self.scal))
        object.__setattr__(self, "c", to_rational(self.c))

    @property
    def affine(self):
        return Polynomial.linear(self.p, self.c)


@dataclass(frozen=True)
class AdmissibleData:
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def m(self):
        """Complex dimension of the total space."""
        return 1 + sum(f.dim for f in self.factors)


@dataclass(frozen=True)
class WeightParams:
    """Affine Killing potential f(z) = a z + b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))

    @property
    def affine(self):
        return Polynomial.linear(self.a, self.b)

    def is_extended(self):
        return self.b == abs(self.a) and self.a != 0


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def raise_for_violations(self):
        if not self.ok:
            raise ValidationError(self.violations)


def validate(data, w=None, extended=False):
    violations = []
    warnings = []
    for j, f in enumerate(data.factors, 1):
        if not isinstance(f.dim, int) or f.dim < 1:
            violations.append(f"factor {j}: dim >= 1 required (got {f.dim})")
        if not f.c > abs(f.p):
            violations.append(f"factor {j}: c_j > |p_j| violated (c={fmt(f.c)}, p={f.p})")
    if w is not None:
        if not w.b > 0:
            violations.append(f"b > 0 violated (b={fmt(w.b)})")
        elif w.b > abs(w.a):
            pass
        elif extended and w.is_extended():
            warnings.append(EXTENDED_DOMAIN)
        elif w.b == abs(w.a):
            violations.append(f"b > |a| violated (a={fmt(w.a)}, b={fmt(w.b)}); "
                              "the ray b = |a| needs the extended flag")
        else:
            violations.append(f"b > |a| violated (a={fmt(w.a)}, b={fmt(w.b)})")
    return ValidationReport(not violations, violations, warnings)


def fiber_polynomial(data):
    """p_c(z) = prod (p_j z + c_j)**dim_j."""
    out = Polynomial.constant(1)
    for f in data.factors:
        out = out * f.affine ** f.dim
    return out


def curvature_sum(data):
    """S(z) = p_c(z) * sum_j Scal_j / (p_j z + c_j), a polynomial."""
    out = Polynomial()
    for j, f in enumerate(data.factors):
        term = Polynomial.constant(f.scal) * f.affine ** (f.dim - 1)
        for i, g in enumerate(data.factors):
            if i != j:
                term = term * g.affine ** g.dim
        out = out + term
    return out


# JSON -----------------------------------------------------------------------
def factor_from_json(obj):
    for key in ("dim", "scal", "p", "c"):
        if key not in obj:
            raise ValueError(f"factor is missing '{key}'")
    dim, p = obj["dim"], obj["p"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ValueError("factor 'dim' must be an integer")
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError("factor 'p' must be an integer")
    return BaseFactor(dim, to_rational(obj["scal"]), p, to_rational(obj["c"]))


def data_from_json(obj):
    factors = obj.get("factors", [])
    if not isinstance(factors, list):
        raise ValueError("'factors' must be a list")
    return AdmissibleData(tuple(factor_from_json(f) for f in factors))


def weight_from_json(obj):
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise ValueError("'weight' must be an object with 'a' and 'b'")
    return WeightParams(to_rational(obj["a"]), to_rational(obj["b"]))


def data_to_json(data):
    return {"factors": [{"dim": f.dim, "scal": fmt(f.scal), "p": f.p, "c": fmt(f.c)}
                        for f in data.factors]}


def weight_to_json(w):
    return {"a": fmt(w.a), "b": fmt(w.b)}
