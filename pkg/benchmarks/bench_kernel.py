"""Benchmark the compiled polynomial kernel against the pure-Python twin.

Two levels:

* micro: the raw kernel functions on operand shapes captured from real
  invariant computations (bivariate convolution, q-only convolution,
  accumulate-into);
* macro: a full integer-table computation run in a subprocess under each
  backend (KLMOV_PURE=1 forces the pure kernel).

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from klmov import _kernel_py  # noqa: E402

try:
    from klmov import _kernel_c
except ImportError:
    _kernel_c = None


def random_qt(rng, terms, with_fractions=False):
    out = {}
    while len(out) < terms:
        key = (rng.randint(-30, 30), rng.randint(-10, 10))
        c = rng.randint(-9, 9) or 1
        out[key] = Fraction(c, rng.choice((1, 1, 1, 2, 3))) if with_fractions else c
    return out


def random_qp(rng, terms):
    out = {}
    while len(out) < terms:
        out[rng.randint(-40, 40)] = rng.randint(-9, 9) or 1
    return out


def time_fn(fn, pairs, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for a, b in pairs:
            fn(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def micro():
    rng = random.Random(2024)
    cases = [
        ("qt_mul 40x40 int", "qt_mul", [(random_qt(rng, 40), random_qt(rng, 40)) for _ in range(60)]),
        ("qt_mul 120x120 int", "qt_mul", [(random_qt(rng, 120), random_qt(rng, 120)) for _ in range(12)]),
        ("qt_mul 60x60 frac", "qt_mul", [(random_qt(rng, 60, True), random_qt(rng, 60, True)) for _ in range(25)]),
        ("qp_mul 80x80", "qp_mul", [(random_qp(rng, 80), random_qp(rng, 80)) for _ in range(40)]),
        ("qt_mul_qp 120x20", "qt_mul_qp", [(random_qt(rng, 120), random_qp(rng, 20)) for _ in range(40)]),
    ]
    print(f"{'case':<22} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>9}")
    for label, name, pairs in cases:
        t_py = time_fn(getattr(_kernel_py, name), pairs, 5) * 1e3
        if _kernel_c is None:
            print(f"{label:<22} {t_py:>10.2f} {'n/a':>14} {'n/a':>9}")
            continue
        t_c = time_fn(getattr(_kernel_c, name), pairs, 5) * 1e3
        print(f"{label:<22} {t_py:>10.2f} {t_c:>14.2f} {t_py / t_c:>8.2f}x")


def macro():
    job = [
        sys.executable,
        "-m",
        "klmov",
        "lmov",
        "--torus",
        "1,1,2",
        "--mu",
        "4,2|2",
        "--bound",
        "8",
        "--format",
        "csv",
    ]
    env = dict(os.environ)
    env["PYTHONPATH"] = os.path.join(os.path.dirname(__file__), "..", "src")
    print("\nmacro: integer table for T(2,2) colored 4,2|2 (fresh process)")
    for label, pure in (("compiled", ""), ("pure", "1")):
        env["KLMOV_PURE"] = pure
        t0 = time.perf_counter()
        subprocess.run(job, env=env, check=True, stdout=subprocess.DEVNULL)
        print(f"  {label:<9} {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    if _kernel_c is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")
    micro()
    macro()
