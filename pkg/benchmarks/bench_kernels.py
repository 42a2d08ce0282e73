#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Kernel rows time both implementations in-process on identical inputs; the
end-to-end rows re-run a representative computation in subprocesses, once
per backend (GLAISHER_PURE_PYTHON=1 forces the fallback).

Run:
    python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from glaisher import _kernels_py  # noqa: E402

try:
    from glaisher import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat=3):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_conv(mod, a, b, n):
    return lambda: mod.conv_truncated(a, b, n, 0)


def bench_factor_sweep(mod, n):
    def run():
        c = [1] + [0] * n
        for k in range(1, n + 1):
            mod.div_one_minus_uqk(c, 1, k)
        for k in range(1, n + 1):
            mod.mul_one_minus_uqk(c, 1, k)
    return run


def bench_add_shift(mod, acc_len, src, reps):
    def run():
        acc = [0] * acc_len
        for i in range(reps):
            mod.add_scaled_shifted(acc, src, i % 50, -3)
    return run


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC)
    if pure:
        env["GLAISHER_PURE_PYTHON"] = "1"
    else:
        env.pop("GLAISHER_PURE_PYTHON", None)
    code = (
        "import time\n"
        "from glaisher import epsilon, gf_D\n"
        "t0 = time.perf_counter()\n"
        "epsilon(3, 400, 'definition'); gf_D(3, 1200)\n"
        "print(time.perf_counter() - t0)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    rng = random.Random(2024)
    rows = []

    n = 600
    a = [rng.randint(-10**12, 10**12) for _ in range(n + 1)]
    b = [rng.randint(-10**12, 10**12) for _ in range(n + 1)]
    rows.append(("conv_truncated, N=600 bignum", bench_conv(_kernels_py, a, b, n),
                 bench_conv(_kernels, a, b, n) if _kernels else None))

    rows.append(("factor sweep (poch+inv), N=2000",
                 bench_factor_sweep(_kernels_py, 2000),
                 bench_factor_sweep(_kernels, 2000) if _kernels else None))

    src = [rng.randint(-10**6, 10**6) for _ in range(1500)]
    rows.append(("add_scaled_shifted x400, N=1500",
                 bench_add_shift(_kernels_py, 1600, src, 400),
                 bench_add_shift(_kernels, 1600, src, 400) if _kernels else None))

    print(f"{'workload':<36} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for name, pure_fn, c_fn in rows:
        tp = best_of(pure_fn)
        if c_fn is None:
            print(f"{name:<36} {tp:>8.3f}s {'n/a':>9} {'n/a':>8}")
            continue
        tc = best_of(c_fn)
        print(f"{name:<36} {tp:>8.3f}s {tc:>8.3f}s {tp / tc:>7.2f}x")

    tp = end_to_end(pure=True)
    if _kernels is not None:
        tc = end_to_end(pure=False)
        print(f"{'end-to-end eps(3,400)+gf_D(3,1200)':<36} {tp:>8.3f}s "
              f"{tc:>8.3f}s {tp / tc:>7.2f}x")
    else:
        print(f"{'end-to-end eps(3,400)+gf_D(3,1200)':<36} {tp:>8.3f}s "
              f"{'n/a':>9} {'n/a':>8}")


if __name__ == "__main__":
    main()
