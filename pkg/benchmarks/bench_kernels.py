"""Compare the compiled kernels with the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both modules directly.  The end-to-end scan runs in a
subprocess per backend, since the backend is chosen once at import.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from extremal_sasaki.exactalg import _pykernels as py

try:
    from extremal_sasaki.exactalg import _ckernels as cy
except ImportError:
    cy = None

SCAN = ("import time; from fractions import Fraction as Q;"
        "from extremal_sasaki import AdmissibleData, BaseFactor;"
        "from extremal_sasaki.report import scan;"
        "from extremal_sasaki.exactalg import BACKEND;"
        "d = AdmissibleData((BaseFactor(2, Q(-7), 1, Q(9, 8)), BaseFactor(1, Q(3), -2, Q(5, 2))));"
        "t = time.perf_counter(); scan(d, 1, 41); print(BACKEND, time.perf_counter() - t)")


def workloads(rng):
    big = [rng.randint(-10 ** 30, 10 ** 30) for _ in range(13)]
    small = [rng.randint(-50, 50) for _ in range(9)]
    grid = range(-1000, 1001)
    return {
        "horner_hom deg 12": lambda K: K.horner_hom(big, 12345, 65536),
        "mul 12 x 12": lambda K: K.mul(big, big),
        "prem 12 / 8": lambda K: K.prem(big, small),
        "sturm_chain deg 8": lambda K: K.sturm_chain(small),
        "grid_signs 2001 pts": lambda K: K.grid_signs(small, grid, 1000),
    }


def bench(fn, K, repeat):
    n, _ = timeit.Timer(lambda: fn(K)).autorange()
    return min(timeit.repeat(lambda: fn(K), number=n, repeat=repeat)) / n


def scan_time(pure):
    env = dict(os.environ)
    env.pop("EXTREMAL_SASAKI_PURE", None)
    if pure:
        env["EXTREMAL_SASAKI_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", SCAN], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'kernel':<24}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name, fn in workloads(random.Random(0)).items():
        tp = bench(fn, py, args.repeat) * 1e6
        if cy is None:
            print(f"{name:<24}{tp:>14.2f}")
            continue
        assert fn(py) == fn(cy)
        tc = bench(fn, cy, args.repeat) * 1e6
        print(f"{name:<24}{tp:>14.2f}{tc:>14.2f}{tp / tc:>9.2f}x")
    print()
    for pure in (True, False):
        backend, t = scan_time(pure)
        print(f"scan, 41 Reeb directions, {backend} backend: {t:.3f} s")


if __name__ == "__main__":
    main()
