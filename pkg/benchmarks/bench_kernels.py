#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Runs the orthogonal-frame enumeration and fixed-line counting for the
degree-1 lattice (240 roots, 240 lines) twice: once with numba enabled
and once with DELPEZZO_NO_NUMBA=1, in separate interpreter processes so
each run imports the kernel module fresh.
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import time

import numpy as np

from delpezzo import _kernels
from delpezzo.picard import PicardLattice, enumerate_exceptional
from delpezzo.weyl import _positive_roots

lat = PicardLattice(1)
pos = _positive_roots(lat)
adj = (pos @ lat.gram @ pos.T) == 0
lines = np.array([e.coords for e in enumerate_exceptional(lat)], dtype=np.int64)
masks = (pos @ lat.gram @ lines.T) == 0

# warm up (includes jit compilation when active)
_kernels.enumerate_cliques(adj, 2, 10**6)

results = {"has_numba": _kernels.HAS_NUMBA}
t0 = time.perf_counter()
frames, truncated = _kernels.enumerate_cliques(adj, 4, 10**6)
results["cliques_k4_s"] = time.perf_counter() - t0
results["cliques_k4_count"] = int(frames.shape[0])

_kernels.fixed_counts(masks, frames[:100])
t0 = time.perf_counter()
counts = _kernels.fixed_counts(masks, frames)
results["fixed_counts_s"] = time.perf_counter() - t0
results["distinct_counts"] = sorted(set(int(c) for c in counts))
print(json.dumps(results))
"""


def run(no_numba: bool) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["DELPEZZO_NO_NUMBA"] = "1"
    else:
        env.pop("DELPEZZO_NO_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    print("collecting timings (degree-1 lattice: 120 positive roots, 240 lines)")
    jit = run(no_numba=False)
    plain = run(no_numba=True)
    assert jit["cliques_k4_count"] == plain["cliques_k4_count"]
    assert jit["distinct_counts"] == plain["distinct_counts"]
    print(f"orthogonal 4-frames enumerated: {jit['cliques_k4_count']}")
    print(f"distinct fixed-line counts:     {jit['distinct_counts']}")
    print()
    header = f"{'kernel':<28} {'numba':>12} {'numpy':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for key, label in (
        ("cliques_k4_s", "clique enumeration (k=4)"),
        ("fixed_counts_s", "fixed-line counting"),
    ):
        a, b = jit[key], plain[key]
        print(f"{label:<28} {a * 1e3:>10.1f}ms {b * 1e3:>10.1f}ms {b / a:>8.1f}x")
    if not jit["has_numba"]:
        print("note: numba unavailable; both rows used the fallback")


if __name__ == "__main__":
    main()
