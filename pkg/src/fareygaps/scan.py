"""Empirical Farey scans: denominator streams and cyclic gap tallies.

One period of the Farey sequence of order Q — the fractions in [0, 1),
starting 0/1, 1/Q — is generated denominator-by-denominator through the
neighbor recurrence, no fraction list ever held.  Denominators congruent
to c0 mod D are *coloured*; the scan tallies the cyclic runs of
uncoloured fractions between consecutive coloured ones, pooling runs
longer than r_max into an overflow bucket.  Zero-length runs (adjacent
coloured fractions) are real for some residue choices and are counted.

Two interchangeable backends walk the recurrence in resumable chunks: a
numba kernel on int64 (the default when numba imports and Q stays well
inside 64 bits) and a pure-Python twin with arbitrary precision.  Both
run the same statement sequence, so histograms are bit-identical.
Select with the FAREYGAPS_BACKEND environment variable or the
``backend=`` argument ("numba" | "python").
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, Mapping, Optional, TextIO

import numpy as np

from .proportions import render_fixed

#: Q above which int64 intermediates could overflow; the Python backend
#: takes over silently.  (k*q stays below Q*(Q+2), so 2**31 is generous.)
_INT64_SAFE_Q = 2 ** 31

_CHUNK_NUMBA = 1 << 27
_CHUNK_PYTHON = 1 << 20

# state vector layout shared by both backends
_QPREV, _QCUR, _RUN, _FIRST, _COLOURED, _OVERFLOW, _OVERFLOW_F, _DONE = range(8)


@dataclass(frozen=True)
class ScanConfig:
    """Parameters of one scan: order, modulus, residue, histogram cutoff."""

    Q: int
    D: int
    c0: int
    r_max: int = 200

    def __post_init__(self):
        if self.D < 2:
            raise ValueError("need modulus D >= 2")
        if self.Q < self.D:
            raise ValueError("need Q >= D so coloured denominators exist")
        if not 0 <= self.c0 < self.D:
            raise ValueError(f"residue {self.c0} out of range mod {self.D}")
        if self.r_max < 1:
            raise ValueError("need r_max >= 1")


@dataclass(frozen=True)
class GapHistogram:
    """Cyclic gap tallies of one scan, plus its conservation totals."""

    config: ScanConfig
    counts: Mapping[int, int]  # r -> count, only nonzero entries
    overflow: int              # gaps longer than r_max
    overflow_fractions: int    # sum of (r+1) over the pooled gaps
    coloured_total: int
    fraction_total: int

    def gap_total(self) -> int:
        return sum(self.counts.values()) + self.overflow

    def ratio(self, r: int) -> Fraction:
        if self.coloured_total == 0:
            raise ValueError("no coloured fractions: ratios undefined")
        return Fraction(self.counts.get(r, 0), self.coloured_total)

    def as_json(self) -> dict:
        return {
            "Q": self.config.Q,
            "D": self.config.D,
            "c0": self.config.c0,
            "r_max": self.config.r_max,
            "counts": {str(r): c for r, c in sorted(self.counts.items())},
            "overflow": self.overflow,
            "overflow_fractions": self.overflow_fractions,
            "coloured_total": self.coloured_total,
            "fraction_total": self.fraction_total,
        }

    def write_csv(self, fp: TextIO) -> None:
        fp.write("r,count,ratio_decimal\n")
        for r, c in sorted(self.counts.items()):
            fp.write(f"{r},{c},{render_fixed(self.ratio(r), 10)}\n")
        if self.overflow:
            fp.write(f"overflow,{self.overflow},"
                     f"{render_fixed(Fraction(self.overflow, self.coloured_total), 10)}\n")


def empirical_nu(h: GapHistogram) -> Dict[int, Fraction]:
    """Exact gap-size proportions r -> counts[r]/coloured_total."""
    if h.coloured_total == 0:
        raise ValueError("no coloured fractions: proportions undefined")
    return {r: Fraction(c, h.coloured_total) for r, c in sorted(h.counts.items())}


# ---------------------------------------------------------------------------
# the denominator recurrence
# ---------------------------------------------------------------------------

def farey_next(q_prev: int, q_cur: int, Q: int) -> int:
    """Next denominator after the consecutive pair (q_prev, q_cur) in Φ_Q."""
    return (q_prev + Q) // q_cur * q_cur - q_prev


def denominator_stream(Q: int) -> Iterator[int]:
    """Denominators of one period of Φ_Q: 0/1, 1/Q, ..., (Q-1)/Q."""
    if Q < 2:
        raise ValueError("need Q >= 2")
    yield 1
    q_prev, q_cur = 1, Q
    while q_cur != 1:
        yield q_cur
        q_prev, q_cur = q_cur, (q_prev + Q) // q_cur * q_cur - q_prev


# ---------------------------------------------------------------------------
# Euler-phi sieve cross-checks
# ---------------------------------------------------------------------------

def phi_sieve(Q: int) -> np.ndarray:
    """phi(0..Q) as int64 (phi(0) = 0 by convention)."""
    phi = np.arange(Q + 1, dtype=np.int64)
    for p in range(2, Q + 1):
        if phi[p] == p:  # p prime
            phi[p::p] -= phi[p::p] // p
    return phi


def coloured_total(Q: int, D: int, c0: int) -> int:
    """Sum of phi(q) over q <= Q with q ≡ c0 (mod D), independent of scans."""
    phi = phi_sieve(Q)
    start = c0 if c0 > 0 else D
    return int(phi[start::D].sum())


# ---------------------------------------------------------------------------
# chunked scan state machines (twin backends)
# ---------------------------------------------------------------------------

def _chunk_python(state, counts, Q, D, c0, r_max, max_steps):
    """Advance the scan by up to max_steps fractions; Python integers."""
    q_prev = state[_QPREV]
    q_cur = state[_QCUR]
    run = state[_RUN]
    first = state[_FIRST]
    coloured = state[_COLOURED]
    overflow = state[_OVERFLOW]
    overflow_f = state[_OVERFLOW_F]
    steps = 0
    while steps < max_steps:
        if q_cur == 1:
            state[_DONE] = 1
            break
        if q_cur % D == c0:
            if first < 0:
                first = run
            elif run <= r_max:
                counts[run] += 1
            else:
                overflow += 1
                overflow_f += run + 1
            coloured += 1
            run = 0
        else:
            run += 1
        q_prev, q_cur = q_cur, (q_prev + Q) // q_cur * q_cur - q_prev
        steps += 1
    state[_QPREV] = q_prev
    state[_QCUR] = q_cur
    state[_RUN] = run
    state[_FIRST] = first
    state[_COLOURED] = coloured
    state[_OVERFLOW] = overflow
    state[_OVERFLOW_F] = overflow_f
    return steps


_numba_chunk = None


def _get_numba_chunk():
    global _numba_chunk
    if _numba_chunk is None:
        from numba import njit

        _numba_chunk = njit(nogil=True, cache=True)(_chunk_python)
    return _numba_chunk


def _resolve_backend(backend: Optional[str], Q: int) -> str:
    if backend is None:
        backend = os.environ.get("FAREYGAPS_BACKEND", "").strip() or "numba"
    if backend not in ("numba", "python"):
        raise ValueError(f"unknown backend {backend!r}; pick numba or python")
    if backend == "numba":
        if Q > _INT64_SAFE_Q:
            return "python"  # lossless fallback outside the int64 fast path
        try:
            import numba  # noqa: F401
        except ImportError:
            return "python"
    return backend


def scan(cfg: ScanConfig, *, backend: Optional[str] = None,
         progress: bool = False, debug: bool = False) -> GapHistogram:
    """Tally the cyclic coloured gaps of one full period of Φ_Q.

    ``debug=True`` additionally tracks numerators alongside the
    denominators (pure Python only) and asserts the unimodularity of
    every consecutive pair, a'q - aq' = 1.
    """
    if debug:
        return _scan_debug(cfg)

    chosen = _resolve_backend(backend, cfg.Q)
    Q, D, c0, r_max = cfg.Q, cfg.D, cfg.c0, cfg.r_max
    phi = phi_sieve(Q)
    expected = int(phi.sum())
    coloured_expected = int(phi[(c0 if c0 > 0 else D)::D].sum())
    del phi

    if chosen == "numba":
        counts = np.zeros(r_max + 1, dtype=np.int64)
        state = np.zeros(8, dtype=np.int64)
        chunk, chunk_size = _get_numba_chunk(), _CHUNK_NUMBA
    else:
        counts = [0] * (r_max + 1)
        state = [0] * 8
        chunk, chunk_size = _chunk_python, _CHUNK_PYTHON

    # the lead fraction 0/1 (denominator 1), then the machine takes over
    if 1 % D == c0:
        state[_FIRST] = 0
        state[_COLOURED] = 1
    else:
        state[_FIRST] = -1
        state[_RUN] = 1
    state[_QPREV], state[_QCUR] = 1, Q

    processed = 1
    while not state[_DONE]:
        processed += int(chunk(state, counts, Q, D, c0, r_max, chunk_size))
        if progress:
            print(f"\rscan Q={Q} D={D} c0={c0}: "
                  f"{100.0 * processed / expected:5.1f}%",
                  end="", file=sys.stderr, flush=True)
    if progress:
        print(file=sys.stderr, flush=True)

    run, first = int(state[_RUN]), int(state[_FIRST])
    coloured = int(state[_COLOURED])
    overflow, overflow_f = int(state[_OVERFLOW]), int(state[_OVERFLOW_F])
    tallies = {r: int(c) for r, c in enumerate(counts) if c}
    if coloured > 0:  # close the cyclic wrap gap
        wrap = first + run
        if wrap <= r_max:
            tallies[wrap] = tallies.get(wrap, 0) + 1
        else:
            overflow += 1
            overflow_f += wrap + 1

    if processed != expected:
        raise AssertionError(f"walked {processed} fractions, sieve says {expected}")
    if coloured != coloured_expected:
        raise AssertionError("coloured tally disagrees with the phi sieve")
    if sum(tallies.values()) + overflow != coloured:
        raise AssertionError("gap conservation broken: one gap per coloured fraction")
    if coloured > 0:
        weighted = sum((r + 1) * c for r, c in tallies.items()) + overflow_f
        if weighted != processed:
            raise AssertionError("fraction conservation broken")

    return GapHistogram(cfg, tallies, overflow, overflow_f, coloured, processed)


def _scan_debug(cfg: ScanConfig) -> GapHistogram:
    """Reference implementation with numerators and per-step identities."""
    Q, D, c0, r_max = cfg.Q, cfg.D, cfg.c0, cfg.r_max
    tallies: Dict[int, int] = {}
    overflow = overflow_f = coloured = processed = 0
    run, first = 0, -1

    def process(q: int) -> None:
        nonlocal run, first, coloured, overflow, overflow_f, processed
        if q % D == c0:
            if first < 0:
                first = run
            elif run <= r_max:
                tallies[run] = tallies.get(run, 0) + 1
            else:
                overflow += 1
                overflow_f += run + 1
            coloured += 1
            run = 0
        else:
            run += 1
        processed += 1

    a_prev, q_prev = 0, 1
    a_cur, q_cur = 1, Q
    process(1)  # the fraction 0/1
    while q_cur != 1:
        assert a_cur * q_prev - a_prev * q_cur == 1
        assert 0 < a_cur <= q_cur <= Q and gcd(a_cur, q_cur) == 1
        process(q_cur)
        k = (q_prev + Q) // q_cur
        a_prev, a_cur = a_cur, k * a_cur - a_prev
        q_prev, q_cur = q_cur, k * q_cur - q_prev
    assert (a_cur, q_cur) == (1, 1)  # the period closes at 1/1
    if coloured > 0:
        wrap = first + run
        if wrap <= r_max:
            tallies[wrap] = tallies.get(wrap, 0) + 1
        else:
            overflow += 1
            overflow_f += wrap + 1
    return GapHistogram(cfg, tallies, overflow, overflow_f, coloured, processed)
