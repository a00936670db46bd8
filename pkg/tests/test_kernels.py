"""The compiled and pure-Python kernels must agree bit for bit."""
import importlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_sasaki.exactalg import _pykernels as py

try:
    cy = importlib.import_module("extremal_sasaki.exactalg._ckernels")
except ImportError:  # pragma: no cover - extension not built
    cy = None

backends = [py] + ([cy] if cy else [])
ints = st.integers(min_value=-10 ** 6, max_value=10 ** 6)
polys = st.lists(ints, min_size=0, max_size=9).map(py.trim)


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
@given(polys, polys, ints, st.integers(min_value=1, max_value=10 ** 4))
@settings(max_examples=200)
def test_backends_agree(a, b, num, den):
    assert cy.horner_hom(a, num, den) == py.horner_hom(a, num, den)
    assert cy.mul(a, b) == py.mul(a, b)
    assert cy.primitive(a) == py.primitive(a)
    if b:
        assert cy.prem(a, b) == py.prem(a, b)
    if len(a) > 1:
        assert cy.sturm_chain(a) == py.sturm_chain(a)


@pytest.mark.parametrize("K", backends)
@given(polys, st.lists(ints, min_size=1, max_size=6).map(py.trim).filter(bool))
@settings(max_examples=100)
def test_prem_identity(K, a, b):
    # |lc(b)|^k a - r is divisible by b, and deg r < deg b
    r = K.prem(a, b)
    assert len(r) < len(b)
    k = max(len(a) - len(b) + 1, 0)
    lhs = [x * abs(b[-1]) ** k for x in a]
    diff = py.trim([x - (r[i] if i < len(r) else 0) for i, x in enumerate(lhs)] or [])
    # exact division check by long division over Q
    from fractions import Fraction
    rem = [Fraction(x) for x in diff]
    while len(rem) >= len(b) and any(rem):
        c = rem[-1] / b[-1]
        s = len(rem) - len(b)
        for j, bj in enumerate(b):
            rem[s + j] -= c * bj
        while rem and rem[-1] == 0:
            rem.pop()
    assert not any(rem)


@pytest.mark.parametrize("K", backends)
def test_horner_sign(K):
    # (z - 1/3)(z + 2) = z^2 + 5/3 z - 2/3  ->  3z^2 + 5z - 2
    c = [-2, 5, 3]
    assert K.sign_at(c, 1, 3) == 0
    assert K.sign_at(c, 0, 1) == -1
    assert K.sign_at(c, 1, 1) == 1
    assert K.grid_signs(c, [-3, 0, 3], 1) == [1, -1, 1]


@pytest.mark.parametrize("K", backends)
def test_variations_count_roots(K):
    # (z^2 - 1/4) * 4 = 4z^2 - 1
    chain = K.sturm_chain([-1, 0, 4])
    assert K.variations(chain, -1, 1) - K.variations(chain, 1, 1) == 2


def test_backend_selected():
    from extremal_sasaki.exactalg import BACKEND
    assert BACKEND in ("cython", "python")


def test_pure_fallback_forced_by_env():
    import os
    import subprocess
    import sys
    env = dict(os.environ, EXTREMAL_SASAKI_PURE="1")
    out = subprocess.run([sys.executable, "-c",
                          "from extremal_sasaki.exactalg import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
