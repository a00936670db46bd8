"""Exact rational, polynomial and rational-function algebra."""
from ._kernels import BACKEND
from .linalg import bareiss_solve, solve_rational
from .logvalue import LogPolynomialValue, LogRatio
from .moments import moment, weighted_integral
from .polynomial import (Polynomial, definite_integral, differentiate,
                         divide_exact, from_shift_basis, gcd, shift_basis,
                         squarefree_part)
from .rational import Rational, fmt, to_rational
from .ratfunc import RationalFunction
from .roots import (PositivityCertificate, count_closed, is_positive_on_closed,
                    isolate_roots, positivity_certificate, rational_roots,
                    sturm_count)

__all__ = [
    "BACKEND", "Rational", "fmt", "to_rational", "Polynomial",
    "RationalFunction", "LogPolynomialValue", "LogRatio", "differentiate",
    "definite_integral", "divide_exact", "shift_basis", "from_shift_basis",
    "gcd", "squarefree_part", "sturm_count", "count_closed", "isolate_roots",
    "is_positive_on_closed", "positivity_certificate",
    "PositivityCertificate", "rational_roots", "moment", "weighted_integral",
    "bareiss_solve", "solve_rational",
]
