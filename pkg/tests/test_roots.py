import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_sasaki.errors import ZeroPolynomial
from extremal_sasaki.exactalg import (Polynomial, count_closed,
                                      is_positive_on_closed, isolate_roots,
                                      positivity_certificate, rational_roots,
                                      sturm_count)
from extremal_sasaki.exactalg import _kernels as K

P = Polynomial


def test_sturm_count_examples():
    assert sturm_count(P([Q(-1, 4), 0, 1]), -1, 1) == 2
    assert sturm_count(P([1, 0, 1]), -1, 1) == 0
    assert sturm_count(P.from_roots([Q(1, 3), Q(1, 2), 5]), 0, 1) == 2
    with pytest.raises(ZeroPolynomial):
        sturm_count(P(), -1, 1)


def test_sturm_half_open_and_multiplicity():
    p = P.from_roots([Q(1, 2), Q(1, 2), 1])
    assert sturm_count(p, -1, 1) == 2          # 1 is in (-1, 1]
    assert sturm_count(p, Q(1, 2), 1) == 1     # 1/2 is excluded on the left
    assert count_closed(p, Q(1, 2), 1) == 2


def test_is_positive_examples():
    assert is_positive_on_closed(P([1]), -1, 1)
    assert not is_positive_on_closed(P([0, 1]), -1, 1)
    # (z-2)^2 + 1/7 has minimum 1 + 1/7 on [-1, 1], attained at z = 1
    assert is_positive_on_closed(P([4 + Q(1, 7), -4, 1]), -1, 1)


def planted(rng, inside):
    """Square-free polynomial with rational roots, `inside` of them in (-1, 1)."""
    roots = set()
    while len(roots) < inside:
        roots.add(Q(rng.randint(-99, 99), 100))
    outside = set()
    for _ in range(rng.randint(0, 8 - inside)):
        outside.add(Q(rng.choice([-1, 1]) * rng.randint(101, 500), 100))
    extra = P([1])
    if rng.random() < 0.5 and len(roots) + len(outside) <= 6:
        extra = P([Q(rng.randint(1, 9), 10), Q(rng.randint(-9, 9), 10), 1])  # maybe complex pair
        if extra.coeff(1) ** 2 - 4 * extra.coeff(0) >= 0:
            extra = P([1])
    lead = Q(rng.choice([-3, -1, 1, 2]), rng.randint(1, 4))
    return P.from_roots(sorted(roots | outside), lead) * extra, roots


def test_planted_roots_counted_exactly():
    rng = random.Random(7)
    for _ in range(200):
        p, roots = planted(rng, rng.randint(0, 6))
        assert sturm_count(p, -1, 1) == len(roots)
        ivs = isolate_roots(p, -1, 1)
        assert len(ivs) == len(roots)
        for (l, r), root in zip(ivs, sorted(roots)):
            assert l <= root <= r


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=20), max_size=5),
       st.fractions(min_value=Q(1, 100), max_value=2, max_denominator=100))
@settings(max_examples=100)
def test_positivity_witness_contract(roots, shift):
    p = P.from_roots(roots) * P.from_roots(roots) - shift + P([0, 0, Q(1, 3)])
    if p.is_zero():
        return
    cert = positivity_certificate(p, -1, 1)
    if cert.positive:
        ints, _ = p.int_form()
        assert all(s > 0 for s in K.grid_signs(ints, range(-1000, 1001, 2), 1000))
    else:
        assert cert.witness is not None
        assert -1 <= cert.witness <= 1
        assert p(cert.witness) <= 0


def test_witness_double_root():
    p = P.from_roots([Q(1, 2), Q(1, 2)])
    cert = positivity_certificate(p, -1, 1)
    assert not cert.positive and cert.witness == Q(1, 2)
    # double root at 1/3 is never hit by dyadic bisection
    p = P.from_roots([Q(1, 3), Q(1, 3)]) + P([0])
    cert = positivity_certificate(p * P([2, 0, 1]), -1, 1)
    assert not cert.positive and cert.witness == Q(1, 3)


def test_rational_roots():
    p = P.from_roots([Q(-2, 3), Q(5, 7), 0, 0]) * P([1, 0, 1])
    assert rational_roots(p) == [Q(-2, 3), 0, Q(5, 7)]


def test_irrational_double_root_has_no_rational_witness():
    # (z^2 - 1/2)^2 vanishes only at +-1/sqrt(2): positive at every rational
    p = P([Q(-1, 2), 0, 1]) ** 2
    cert = positivity_certificate(p, -1, 1)
    assert not cert.positive and cert.witness is None
    assert len(cert.roots) == 2
