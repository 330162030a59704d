#!/usr/bin/env python3
"""Benchmark the eigensolver kernels: numba backend vs pure-numpy fallback.

The backend is chosen at import time from OCTOEIG_NUMBA, so each
measurement runs in a fresh subprocess.  The numba timing excludes jit
compilation (a warmup factorization runs first).

Usage:
    python benchmarks/bench_eigensolver.py [--sizes 16,32,64,128] [--repeats 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json
import sys
import time

import numpy as np

from octoeig.kernels import BACKEND
from octoeig.linalg import real_schur, schur_eigensystem

sizes = json.loads(sys.argv[1])
repeats = int(sys.argv[2])

rng = np.random.default_rng(1729)
real_schur(rng.uniform(-1, 1, (8, 8)))  # warmup: pay jit compilation here

rows = []
for n in sizes:
    A = rng.uniform(-1.0, 1.0, (n, n))
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        Q, T = real_schur(A)
        times.append(time.perf_counter() - t0)
    froA = float(np.sqrt((A * A).sum()))
    resid = float(np.abs(Q @ T @ Q.T - A).max() / max(1.0, froA))
    etimes = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        schur_eigensystem(A)
        etimes.append(time.perf_counter() - t0)
    rows.append(
        {
            "n": n,
            "schur_s": min(times),
            "eigensystem_s": min(etimes),
            "residual": resid,
        }
    )
print(json.dumps({"backend": BACKEND, "rows": rows}))
"""


def run_backend(numba_on: bool, sizes, repeats):
    env = dict(os.environ, OCTOEIG_NUMBA="1" if numba_on else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(sizes), str(repeats)],
        env=env,
        capture_output=True,
        text=True,
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="16,32,64,128")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    numba = run_backend(True, sizes, args.repeats)
    numpy_ = run_backend(False, sizes, args.repeats)
    if numba["backend"] != "numba":
        print("note: numba unavailable, both columns are the numpy fallback")

    print(f"{'n':>5} | {'numba schur':>12} {'numpy schur':>12} {'speedup':>8} | "
          f"{'numba eig':>12} {'numpy eig':>12}")
    print("-" * 72)
    for rb, rn in zip(numba["rows"], numpy_["rows"]):
        s1, s2 = rb["schur_s"], rn["schur_s"]
        e1, e2 = rb["eigensystem_s"], rn["eigensystem_s"]
        print(f"{rb['n']:>5} | {s1:12.5f} {s2:12.5f} {s2 / s1:8.1f}x | "
              f"{e1:12.5f} {e2:12.5f}")
    worst = max(max(r["residual"] for r in numba["rows"]),
                max(r["residual"] for r in numpy_["rows"]))
    print(f"worst relative Schur residual across both backends: {worst:.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
