"""Verification suites: recompute every reference table from scratch.

Each suite rebuilds one slice of the stored reference data (slice areas,
emptiness rules, polygon catalogues, proportion tables, scan tallies)
through the public pipeline and reports per-check results.  Suites are
independent; the runner executes any subset, optionally across threads
(FAREYGAPS_THREADS), and canonicalizes output order.

Suite names are short stable tokens (they appear on the CLI):

  identities  random continuant identity checks (4 x 1000 cases)
  lemma7      single-index slice areas and the unit partition
  lemma15     emptiness catalogues for index pairs and triples
  trees       subtree conservation, node/leaf area closed forms
  appendix1   catalogued polygon vertex lists r >= 8
  appendix2   the 73-row proportion table, both routes, all digits
  appendix3   degenerate-set catalogue equality with continuant columns
  theorem1    small-r proportions, modulus 3
  theorem2    proportions for modulus 2
  scan-table  empirical tallies and the printed-table comparison
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import reference
from .continuants import continuant
from .enumeration import (CongruenceSpec, build_tree, degenerate_table,
                          leaf_area, leaf_tuple, pentagon_witness,
                          slot_families, NODE_AREA_FORMS)
from .geometry import ConvexRegion, area, is_empty, region, single_slice_area
from .proportions import (NuResult, SymbolicValue, nu_closed_form,
                          nu_enumeration_table, render_fixed, sig_round)
from .scan import ScanConfig, coloured_total, scan
from .tuples import TupleSpec

DEFAULT_SEED = 20260815

_MODES = ("trunc", "half_up", "half_even")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        text = f"{mark} [{self.suite}] {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def _check(out: List[CheckResult], suite: str, name: str, ok: bool,
           detail: str = "") -> None:
    out.append(CheckResult(suite, name, bool(ok), detail))


# ---------------------------------------------------------------------------
# identities: 4 x 1000 random continuant checks
# ---------------------------------------------------------------------------

def _suite_identities(seed: int) -> List[CheckResult]:
    rng = random.Random(seed)
    out: List[CheckResult] = []
    cases = 1000

    fails = 0
    for _ in range(cases):  # K(.., k_r + 1) = K_r + K_{r-1}
        ks = [rng.randint(1, 9) for _ in range(rng.randint(1, 12))]
        bumped = ks[:-1] + [ks[-1] + 1]
        if continuant(bumped) != continuant(ks) + continuant(ks[:-1]):
            fails += 1
    _check(out, "identities", "increment", fails == 0, f"{cases - fails}/{cases}")

    fails = 0
    for _ in range(cases):  # mirror symmetry
        ks = [rng.randint(1, 9) for _ in range(rng.randint(1, 12))]
        if continuant(ks[::-1]) != continuant(ks):
            fails += 1
    _check(out, "identities", "mirror", fails == 0, f"{cases - fails}/{cases}")

    fails = 0
    for _ in range(cases):  # concatenation splitting
        ks = [rng.randint(1, 9) for _ in range(rng.randint(1, 8))]
        ls = [rng.randint(1, 9) for _ in range(rng.randint(1, 8))]
        lhs = continuant(ks + ls)
        rhs = (continuant(ks) * continuant(ls)
               - continuant(ks[:-1]) * continuant(ls[1:]))
        if lhs != rhs:
            fails += 1
    _check(out, "identities", "splitting", fails == 0, f"{cases - fails}/{cases}")

    fails = 0
    for _ in range(cases):  # unimodularity of neighbor continuant pairs
        ks = [rng.randint(1, 9) for _ in range(rng.randint(2, 12))]
        det = (continuant(ks[:-1]) * continuant(ks[1:])
               - continuant(ks[1:-1]) * continuant(ks))
        if det != 1:
            fails += 1
    _check(out, "identities", "determinant", fails == 0, f"{cases - fails}/{cases}")
    return out


# ---------------------------------------------------------------------------
# lemma7: slice areas and the unit partition
# ---------------------------------------------------------------------------

def _suite_lemma7(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    bad = [k for k in range(1, 51) if area(region((k,))) != single_slice_area(k)]
    _check(out, "lemma7", "slice areas k<=50", not bad, f"bad k: {bad}" if bad else "50/50")
    _check(out, "lemma7", "top slice", area(region((1,))) == Fraction(1, 6), "|T(1)| = 1/6")
    running = Fraction(0)
    bad = []
    for K in range(1, 101):
        running += single_slice_area(K)
        if running != Fraction(1, 2) - Fraction(2, (K + 1) * (K + 2)):
            bad.append(K)
    _check(out, "lemma7", "unit partition K<=100", not bad,
           f"bad K: {bad}" if bad else "100/100")
    return out


# ---------------------------------------------------------------------------
# lemma15: emptiness catalogues
# ---------------------------------------------------------------------------

def _suite_lemma15(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    bad = [(k, m) for k in range(1, 31) for m in range(1, 31)
           if is_empty((k, m)) != reference.empty_pair(k, m)]
    _check(out, "lemma15", "pair emptiness k,m<=30", not bad,
           f"bad: {bad[:4]}" if bad else "900/900")
    bad = [(k, m, n) for k in range(1, 14) for m in range(1, 14)
           for n in range(1, 14)
           if is_empty((k, m, n)) != reference.empty_triple(k, m, n)]
    _check(out, "lemma15", "triple emptiness k,m,n<=13", not bad,
           f"bad: {bad[:4]}" if bad else "2197/2197")
    w7 = (3,) + (2,) * 4 + (1, 6)
    w8 = (3,) + (2,) * 5 + (1, 6)
    _check(out, "lemma15", "empty witness length 7",
           is_empty(w7) and continuant(w7) == 1,
           f"empty, K = {continuant(w7)}")
    _check(out, "lemma15", "empty witness length 8",
           is_empty(w8) and continuant(w8) == -1,
           f"empty, K = {continuant(w8)}")
    return out


# ---------------------------------------------------------------------------
# trees: conservation, node and leaf area closed forms
# ---------------------------------------------------------------------------

def _suite_trees(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    c = CongruenceSpec(3, 0, 1)
    table = degenerate_table(14, c)
    for seed_t, depth in (((2, 4), 12), ((5, 1), 12), ((1, 2), 12)):
        tree = build_tree(seed_t, c, depth)
        viol = tree.conservation_violations()
        _check(out, "trees", f"area conservation from {seed_t}", not viol,
               f"{len(list(tree.nodes()))} nodes" if not viol else f"{len(viol)} violations")
        got = sorted(n.indices for n in tree.degenerate_leaves())
        want = sorted(t for r in range(2, depth + 1)
                      for t in (x for x in table[r].finite
                                if x[: len(seed_t)] == seed_t and len(x) <= depth))
        _check(out, "trees", f"degenerate leaves from {seed_t}", got == want,
               f"{len(got)} leaves match the catalogue")

    bad = []
    for form in NODE_AREA_FORMS:
        for n in range(form.n_min, 21):
            if area(region(form.indices(n))) != form.area_form(n):
                bad.append((form.label, n))
    _check(out, "trees", "node area forms n<=20", not bad,
           f"bad: {bad[:4]}" if bad else f"{len(NODE_AREA_FORMS)} forms x 20")

    bad = []
    checked = 0
    for n in range(1, 11):
        for w in range(1, 6):
            t = leaf_tuple("A", n, w)
            if area(region(t)) != leaf_area("A", n, w):
                bad.append(("A", n, w))
            checked += 1
        for w in range(3, 9):
            if n >= 1:
                t = leaf_tuple("B", n, w)
                if area(region(t)) != leaf_area("B", n, w):
                    bad.append(("B", n, w))
                checked += 1
    from .enumeration import c_leaf_entries
    for stalk in range(1, 31):
        for t, a, level in c_leaf_entries(stalk):
            if area(region(t)) != a:
                bad.append(("C", stalk, level))
            checked += 1
    _check(out, "trees", "leaf area closed forms", not bad,
           f"bad: {bad[:4]}" if bad else f"{checked} leaves")

    bad = [n for n in range(1, 6)
           if len(region(pentagon_witness(n)).vertices) != 5]
    _check(out, "trees", "pentagon witness n<=5", not bad,
           f"bad n: {bad}" if bad else "5 vertices each")
    return out


# ---------------------------------------------------------------------------
# appendix1: polygon catalogue
# ---------------------------------------------------------------------------

def _suite_appendix1(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    bad = []
    checked = 0
    for entry in reference.POLYGON_CATALOGUE:
        for n in range(entry.n_min, 6):
            reg = region(entry.indices(n))
            walk = entry.vertices(n)
            checked += 1
            if entry.label in reference.ZIGZAG_LABELS:
                got = {(v.x, v.y) for v in reg.vertices}
                if got != set(walk) or reg.empty:
                    bad.append((entry.label, n))
                continue
            canon = ConvexRegion(walk)
            if (len(canon.vertices) != len(walk)
                    or canon.vertices != reg.vertices
                    or canon.area != reg.area):
                bad.append((entry.label, n))
    _check(out, "appendix1", "vertex lists and areas", not bad,
           f"bad: {bad[:4]}" if bad else
           f"{len(reference.POLYGON_CATALOGUE)} entries, {checked} instances")
    return out


# ---------------------------------------------------------------------------
# appendix2: the 73-row table by both routes
# ---------------------------------------------------------------------------

def _suite_appendix2(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    enum = nu_enumeration_table(80, 3)
    bad_exact, bad_dec, bad_route = [], [], []
    for r, (rat, dec) in reference.NU_TABLE_D3.items():
        closed = nu_closed_form(r, 3).value
        if not (closed.is_rational and closed.as_rational() == Fraction(rat)):
            bad_exact.append(r)
        if enum[r].value != closed:
            bad_route.append(r)
        if sig_round(Fraction(rat), 15, "half_up") != dec:
            bad_dec.append(r)
    n = len(reference.NU_TABLE_D3)
    _check(out, "appendix2", "exact rationals (closed route)", not bad_exact,
           f"bad: {bad_exact[:4]}" if bad_exact else f"{n}/{n}")
    _check(out, "appendix2", "route agreement r=8..80", not bad_route,
           f"bad: {bad_route[:4]}" if bad_route else f"{n}/{n}")
    _check(out, "appendix2", "printed decimals (15 digits)", not bad_dec,
           f"bad: {bad_dec[:4]}" if bad_dec else f"{n}/{n}")
    return out


# ---------------------------------------------------------------------------
# appendix3: degenerate-set catalogue equality
# ---------------------------------------------------------------------------

def _fam_fields(fam) -> tuple:
    return (fam.prefix, fam.suffix, fam.residue, fam.modulus, fam.k_min,
            fam.offset)


def _suite_appendix3(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    for D, r_max in ((3, 25), (2, 11)):
        table = degenerate_table(r_max, CongruenceSpec(D, 0, 1))
        bad = []
        for r in range(1, r_max + 1):
            want_finite, want_fams = reference.catalogue_rows(D, r)
            ds = table[r]
            got_finite = sorted((t, continuant(t)) for t in ds.finite)
            got_fams = sorted(_fam_fields(f) for f in ds.families)
            want_f = sorted(_fam_fields(f) for f in want_fams)
            if got_finite != sorted(want_finite) or got_fams != want_f:
                bad.append(r)
        _check(out, "appendix3", f"catalogue equality, modulus {D}", not bad,
               f"bad r: {bad}" if bad else f"r = 1..{r_max}")

    # the family continuant column: members evaluate to k - offset
    bad = []
    for r in range(1, 6):
        for fam in slot_families(r, CongruenceSpec(3, 0, 1)):
            for k in list(fam.members_below(fam.k_min + 6 * fam.modulus)):
                if continuant(fam.member(k)) != k - fam.offset:
                    bad.append((fam.template(), k))
    _check(out, "appendix3", "family continuant column", not bad,
           f"bad: {bad[:4]}" if bad else "members evaluate to k - offset")

    # run order matters: writing the n-fold (1,4) run as (4,1) breaks the
    # continuant column, so a transposed reading would be caught
    vals = [continuant((1,) + (2,) * (3 * m) + (3,) + (4, 1) * m + (1, 5))
            for m in range(1, 5)]
    _check(out, "appendix3", "run order sensitivity",
           vals == [-15, -33, -51, -69] and all(v != 3 for v in vals),
           f"transposed-run continuants {vals}")
    return out


# ---------------------------------------------------------------------------
# theorem1 / theorem2: proportion values against printed decimals
# ---------------------------------------------------------------------------

def _decimal_row_ok(value: SymbolicValue, dec: str) -> bool:
    """A 10-place printed decimal matches if some rounding mode yields it
    and the numeric distance is below 1e-9 (the table mixes truncation
    and rounding)."""
    approx = value.approx()[0]
    if abs(approx - Fraction(dec)) >= Fraction(1, 10 ** 9):
        return False
    return any(render_fixed(value, 10, m) == dec for m in _MODES)


def _suite_theorem1(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    enum = nu_enumeration_table(7, 3)
    bad = [r for r in range(1, 8)
           if enum[r].value != SymbolicValue(*reference.SMALL_NU_D3[r])]
    _check(out, "theorem1", "symbolic values via enumeration", not bad,
           f"bad r: {bad}" if bad else "r = 1..7")
    bad = []
    for r, dec in reference.SMALL_NU_D3_DECIMALS.items():
        if len(dec) <= 12:
            if not _decimal_row_ok(enum[r].value, dec):
                bad.append(r)
        elif sig_round(enum[r].value, 15, "half_up") != dec:
            bad.append(r)
    _check(out, "theorem1", "printed decimals", not bad,
           f"bad r: {bad}" if bad else f"{len(reference.SMALL_NU_D3_DECIMALS)} rows")
    return out


def _suite_theorem2(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    enum = nu_enumeration_table(16, 2)
    bad = [r for r in range(1, 5)
           if enum[r].value != SymbolicValue(*reference.SMALL_NU_D2[r])]
    _check(out, "theorem2", "symbolic values via enumeration", not bad,
           f"bad r: {bad}" if bad else "r = 1..4 (2/45 at r = 4)")

    bad = []
    for r in range(5, 17):
        want = Fraction(8, (2 * r - 3) * (2 * r - 1) * (2 * r + 1))
        if (enum[r].value.as_rational() != want
                or nu_closed_form(r, 2).value.as_rational() != want):
            bad.append(r)
    _check(out, "theorem2", "closed formula r = 5..16", not bad,
           f"bad r: {bad}" if bad else "both routes")

    bad = []
    modes = {m: 0 for m in _MODES}
    for r, (rat, dec) in reference.NU_TABLE_D2.items():
        value = enum[r].value
        if value.as_rational() != Fraction(rat) or not _decimal_row_ok(value, dec):
            bad.append(r)
        for m in _MODES:
            if render_fixed(value, 10, m) == dec:
                modes[m] += 1
    pinned = {"trunc": 11, "half_up": 9, "half_even": 9}
    _check(out, "theorem2", "printed list r = 5..16", not bad and modes == pinned,
           f"bad: {bad[:4]}, modes {modes}" if bad or modes != pinned
           else f"12 rows; rounding-mode matches {modes} (mixed table)")

    bad = [r for r, dec in reference.SMALL_NU_D2_DECIMALS.items()
           if not _decimal_row_ok(enum[r].value, dec)]
    _check(out, "theorem2", "small-r decimals", not bad,
           f"bad r: {bad}" if bad else "r = 1..3")
    return out


# ---------------------------------------------------------------------------
# scan-table: the empirical tabulation
# ---------------------------------------------------------------------------

def _suite_scan_table(seed: int) -> List[CheckResult]:
    out: List[CheckResult] = []
    tbl = reference.SCAN_TABLE
    totals = {Q: coloured_total(Q, 3, 0) for Q in (tbl["matching_Q"],
                                                   tbl["labelled_Q"])}
    match = [Q for Q, t in totals.items() if t == tbl["coloured_total"]]
    _check(out, "scan-table", "scale identification",
           match == [tbl["matching_Q"]]
           and totals[tbl["labelled_Q"]] == tbl["coloured_total_at_labelled_Q"],
           f"labelled Q = {tbl['labelled_Q']} but coloured total "
           f"{tbl['coloured_total']} belongs to Q = {match[0] if match else '?'} "
           f"(the labelled Q gives {totals[tbl['labelled_Q']]})")

    h = scan(ScanConfig(tbl["matching_Q"], 3, 0, r_max=40))
    _check(out, "scan-table", "frozen histogram r <= 40",
           dict(h.counts) == reference.SCAN_COUNTS_30000
           and h.overflow == reference.SCAN_30000_OVERFLOW_PAST_40
           and h.fraction_total == reference.SCAN_30000_FRACTION_TOTAL,
           f"coloured {h.coloured_total}, fractions {h.fraction_total}")

    rows = tbl["rows"]
    mism = [r for r, (c, _) in rows.items() if h.counts.get(r) != c]
    _check(out, "scan-table", "printed counts",
           mism == [2] and h.counts[2] == tbl["row2_consistent_count"],
           f"13/14 bit-exact; row 2 prints {rows[2][0]} but its own ratio "
           f"and the rescan give {tbl['row2_consistent_count']}")

    modes = {m: 0 for m in _MODES}
    for r, (_, dec) in rows.items():
        ratio = Fraction(h.counts[r], h.coloured_total)
        for m in _MODES:
            if render_fixed(ratio, 10, m) == dec:
                modes[m] += 1
    _check(out, "scan-table", "printed ratios",
           modes == {"trunc": 9, "half_up": 12, "half_even": 12},
           f"rounding-mode matches {modes} (rows 7 and 14 print one ulp high)")
    return out


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[[int], List[CheckResult]]] = {
    "identities": _suite_identities,
    "lemma7": _suite_lemma7,
    "lemma15": _suite_lemma15,
    "trees": _suite_trees,
    "appendix1": _suite_appendix1,
    "appendix2": _suite_appendix2,
    "appendix3": _suite_appendix3,
    "theorem1": _suite_theorem1,
    "theorem2": _suite_theorem2,
    "scan-table": _suite_scan_table,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> List[CheckResult]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return fn(seed)


def run_suites(names: Optional[Sequence[str]] = None,
               seed: int = DEFAULT_SEED,
               threads: Optional[int] = None) -> List[CheckResult]:
    """Run suites (all by default), in canonical order, optionally threaded."""
    chosen = list(SUITES) if names is None else list(names)
    for name in chosen:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    if threads is None:
        threads = int(os.environ.get("FAREYGAPS_THREADS", "1") or "1")
    if threads > 1 and len(chosen) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {name: pool.submit(SUITES[name], seed) for name in chosen}
            results = {name: f.result() for name, f in futures.items()}
    else:
        results = {name: SUITES[name](seed) for name in chosen}
    out: List[CheckResult] = []
    for name in chosen:  # canonical ordering regardless of completion order
        out.extend(results[name])
    return out
