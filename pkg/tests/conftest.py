import random
from contextlib import contextmanager
from fractions import Fraction

import pytest

from extremal_sasaki import AdmissibleData, BaseFactor, WeightParams


def random_rational(rng, lo, hi, den=12):
    d = rng.randint(1, den)
    return Fraction(rng.randint(int(lo * d), int(hi * d)), d)


def random_data(rng, max_m=4, allow_zero_twist=True):
    budget = rng.randint(0, max_m - 1)
    factors = []
    while budget > 0:
        dim = rng.randint(1, budget)
        budget -= dim
        p = rng.randint(-2, 2) if allow_zero_twist else rng.choice([-2, -1, 1, 2])
        c = abs(p) + Fraction(rng.randint(1, 30), rng.randint(1, 10))
        scal = random_rational(rng, -5, 5)
        factors.append(BaseFactor(dim, scal, p, c))
    return AdmissibleData(tuple(factors))


def random_weight(rng, b=None, margin=Fraction(1, 10)):
    b = b if b is not None else Fraction(rng.randint(1, 5), rng.randint(1, 3))
    span = b - margin
    d = rng.randint(1, 20)
    a = Fraction(rng.randint(-int(span * d), int(span * d)), d)
    return WeightParams(a, b)


def random_instances(seed, count, max_m=4):
    rng = random.Random(seed)
    return [(random_data(rng, max_m), random_weight(rng)) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_configure(config):
    config.acceptance_results = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    results = request.config.acceptance_results

    @contextmanager
    def run(label):
        try:
            yield
        except BaseException:
            results.append(f"FAIL  {label}")
            raise
        results.append(f"PASS  {label}")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_results", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("#")[1].split(" ")[0])):
            terminalreporter.write_line(line)
