from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_sasaki.errors import NotDivisible, ZeroScale
from extremal_sasaki.exactalg import (Polynomial, RationalFunction,
                                      definite_integral, differentiate,
                                      divide_exact, from_shift_basis, gcd,
                                      shift_basis, squarefree_part)

P = Polynomial
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
polys = st.lists(rationals, max_size=8).map(P)


def test_differentiate_examples():
    assert differentiate(P([1, 0, -1])) == P([0, -2])
    assert differentiate(P([5])) == P()
    assert differentiate(P([0, 0, 0, 1])) == P([0, 0, 3])


def test_definite_integral_examples():
    assert definite_integral(P([1]), -1, 1) == 2
    assert definite_integral(P([0, 1]), -1, 1) == 0
    assert definite_integral(P([0, 0, 1]), -1, 1) == Q(2, 3)


def test_divide_exact_examples():
    assert divide_exact(P([1, 0, -1]), P([1, 0, -1])) == P([1])
    assert divide_exact(P([1, 0, -1]), P([1, -1])) == P([1, 1])
    with pytest.raises(NotDivisible):
        divide_exact(P([1, 0, 1]), P([1, -1]))


def test_shift_basis_examples():
    assert shift_basis(P([0, 1]), 1, 1) == [-1, 1]
    assert shift_basis(P([1]), 3, 7) == [1]
    # (2z)^2 / 4 = z^2
    assert shift_basis(P([0, 0, 1]), 2, 0) == [0, 0, Q(1, 4)]
    with pytest.raises(ZeroScale):
        shift_basis(P([0, 1]), 0, 1)


@given(polys, rationals.filter(bool), rationals)
@settings(max_examples=100)
def test_shift_basis_round_trip(p, a, b):
    q = shift_basis(p, a, b)
    assert len(q) == len(p.coeffs)
    # re-expand term by term, independently of from_shift_basis
    expanded = P()
    for s, qs in enumerate(q):
        expanded = expanded + P([b, a]) ** s * qs
    assert expanded == p
    assert from_shift_basis(q, a, b) == p


@given(polys, polys)
@settings(max_examples=100)
def test_ring_laws(p, q):
    assert p * q == q * p
    assert (p + q) - q == p
    x = Q(3, 7)
    assert (p * q)(x) == p(x) * q(x)


@given(polys, polys.filter(lambda p: not p.is_zero()))
@settings(max_examples=100)
def test_divmod(p, q):
    d, r = p.divmod(q)
    assert d * q + r == p
    assert r.degree < q.degree


def test_gcd_and_squarefree():
    p = P.from_roots([Q(1, 2), Q(1, 2), 3])
    q = P.from_roots([Q(1, 2), -1])
    assert gcd(p, q) == P.from_roots([Q(1, 2)])
    assert squarefree_part(p) == P.from_roots([Q(1, 2), 3])


def test_compose_and_eval():
    p = P([1, 2, 3])
    assert p(P([0, 2])) == P([1, 4, 12])
    assert p(Q(1, 2)) == Q(11, 4)
    assert p.sign_at(-5) == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        P([0.5])


def test_string_round_trip():
    p = P([Q(-3, 7), 0, 5])
    assert p.to_strings() == ["-3/7", "0", "5"]
    assert P.from_strings(p.to_strings()) == p


def test_rational_function_reduction():
    # (z+2)(1-z^2) / (z+2) = 1 - z^2
    r = RationalFunction(P([2, 1]) * P([1, 0, -1]), P([2, 1]))
    assert r.is_polynomial() and r.num == P([1, 0, -1])
    r = RationalFunction(P([1, 0, -1]), P([4, 4, 1]))
    assert r.den == P([4, 4, 1])
    r = RationalFunction(P([2, 2]), P([2, 4]))
    assert r.den == P([Q(1, 2), 1]) and r.num == P([Q(1, 2), Q(1, 2)])


@given(polys, polys.filter(lambda p: not p.is_zero()))
@settings(max_examples=50)
def test_rational_function_derivative(p, q):
    r = RationalFunction(p, q)
    lhs = r.derivative() * RationalFunction(q) * RationalFunction(q)
    assert lhs == RationalFunction(p.derivative() * q - p * q.derivative())
