#!/usr/bin/env python3
"""Benchmark the numba scan kernel against the pure-Python fallback.

Both backends run the same state-machine function (`scan._chunk_python`);
the numba backend compiles it with @njit, the python backend executes it
as-is.  Results must be bit-identical — this script asserts that while
timing both, so it doubles as a consistency check.

Usage:
    python3 scripts/benchmark_backends.py [--Q 30000] [--D 3] [--c0 0]

Expect the numba column to win by about two orders of magnitude once Q
is in the tens of thousands; at tiny Q the JIT warm-up dominates.
"""

from __future__ import annotations

import argparse
import sys
import time

from fareygaps import ScanConfig, scan


def run(cfg: ScanConfig, backend: str) -> tuple[float, object]:
    t0 = time.perf_counter()
    hist = scan(cfg, backend=backend)
    return time.perf_counter() - t0, hist


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--Q", type=int, default=30000)
    ap.add_argument("--D", type=int, default=3)
    ap.add_argument("--c0", type=int, default=0)
    ap.add_argument("--rmax", type=int, default=200)
    args = ap.parse_args()

    cfg = ScanConfig(Q=args.Q, D=args.D, c0=args.c0, r_max=args.rmax)
    print(f"scan Q={args.Q} D={args.D} c0={args.c0}")

    # Warm the JIT on a small config so the first timed run is honest.
    scan(ScanConfig(Q=100, D=args.D, c0=args.c0), backend="numba")

    t_numba, h_numba = run(cfg, "numba")
    t_python, h_python = run(cfg, "python")

    if h_numba.counts != h_python.counts or h_numba.overflow != h_python.overflow:
        print("FATAL: backends disagree", file=sys.stderr)
        return 1

    print(f"  numba   {t_numba:10.3f} s")
    print(f"  python  {t_python:10.3f} s")
    print(f"  speedup {t_python / t_numba:10.1f}x")
    print(f"  coloured_total {h_numba.coloured_total}, "
          f"histogram identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
