"""Timing comparison: compiled extension vs numpy fallback.

Runs the two hot kernels (per-column convolution, sliding extrema) against
both backends in-process, then times the end-to-end randomized support check
through each backend in a subprocess (the package picks its backend at
import, so the fallback run sets UNITONE_NO_EXT=1).

Usage: python3 benchmarks/bench_kernels.py [--trials 20]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from unitone import _kernels_np
from unitone import kernels

try:
    from unitone import _kernels as _ext
except ImportError:
    _ext = None


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(rng, nx, nw):
    f = np.ascontiguousarray(rng.normal(size=(nx, nw)) + 1j * rng.normal(size=(nx, nw)))
    g = np.ascontiguousarray(rng.normal(size=(nx, nw)) + 1j * rng.normal(size=(nx, nw)))
    prof = np.ascontiguousarray(rng.normal(size=4 * nw))

    rows = []
    backends = [("numpy", _kernels_np)] + ([("compiled", _ext)] if _ext else [])
    for name, mod in backends:
        t_conv = timeit(mod.conv_columns, f, g, repeat=20)
        t_min = timeit(mod.sliding_min, prof, 2, repeat=50)
        t_max = timeit(mod.sliding_max, prof, 2, repeat=50)
        rows.append((name, t_conv, t_min, t_max))

    print(f"kernel timings ({nx} x {nw} field pair, length-{prof.size} profiles), best of repeats:")
    print(f"{'backend':<10} {'conv_columns':>14} {'sliding_min':>13} {'sliding_max':>13}")
    for name, tc, tn, tx in rows:
        print(f"{name:<10} {tc * 1e6:>12.1f}us {tn * 1e6:>11.1f}us {tx * 1e6:>11.1f}us")
    if len(rows) == 2:
        print(
            "speedup (numpy time / compiled time): "
            f"conv {rows[0][1] / rows[1][1]:.1f}x, "
            f"min {rows[0][2] / rows[1][2]:.1f}x, "
            f"max {rows[0][3] / rows[1][3]:.1f}x"
        )
    print()


SNIPPET = """
import time
import numpy as np
from unitone import kernels, piecewise_box_pair, titchmarsh_check

rng = np.random.default_rng(12345)
pairs = [piecewise_box_pair(rng) for _ in range({trials})]
t0 = time.perf_counter()
for f, g in pairs:
    rep = titchmarsh_check(f, g)
    assert rep.passed
dt = time.perf_counter() - t0
print(f"{{kernels.backend_name()}}: {trials} randomized support checks in {{dt:.3f}} s")
"""


def bench_end_to_end(trials):
    for env_extra in ({}, {"UNITONE_NO_EXT": "1"}):
        env = dict(os.environ, **env_extra)
        code = SNIPPET.format(trials=trials)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=20, help="end-to-end check count")
    args = ap.parse_args()

    print(f"active backend in this process: {kernels.backend_name()}")
    rng = np.random.default_rng(0)
    bench_kernels(rng, 32, 64)  # the size the randomized support suite uses
    bench_kernels(rng, 64, 256)  # larger, where np.convolve's FFT-free loop catches up
    sys.stdout.flush()
    bench_end_to_end(args.trials)


if __name__ == "__main__":
    main()
