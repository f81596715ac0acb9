"""End-to-end acceptance runs, one numbered criterion per test.

Every test recomputes its targets from scratch through the public
pipeline (no stored intermediates), asserts them at the stated
tolerance, and reports exactly one PASS/FAIL line in the terminal
summary block.  Criterion 10 scans one full period at both candidate
orders of magnitude — expect that single test to take a few minutes.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from conftest import record_acceptance

from fareygaps import (CongruenceSpec, LIVE, ScanConfig, SymbolicValue,
                       admissibility_check, area, build_tree, coloured_total,
                       normalization_tail_bound, nu_closed_form,
                       nu_enumeration_table, nu_from_enumeration,
                       pentagon_witness, phi_sieve, region, render_fixed,
                       run_suite, scan, sig_round, single_slice_area,
                       symbolic, weighted_tail_bound)
from fareygaps import reference
from fareygaps.geometry import _area_of, reverse_map_check
from fareygaps.verify import DEFAULT_SEED

F = Fraction
SPEC3 = CongruenceSpec(3, 0, 1)
MODES = ("trunc", "half_up", "half_even")


@contextmanager
def criterion(num):
    info = {"note": ""}
    try:
        yield info
    except BaseException as exc:
        detail = info["note"] or "(no detail)"
        record_acceptance(num, False, f"{detail}  [{type(exc).__name__}: {exc}]")
        raise
    record_acceptance(num, True, info["note"])


def _suite_green(name):
    results = run_suite(name, seed=DEFAULT_SEED)
    bad = [r.line() for r in results if not r.ok]
    assert not bad, "\n".join(bad)
    return results


def test_criterion_01_exact_values_via_pipeline():
    with criterion(1) as info:
        _area_of.cache_clear()      # honest cold-cache timings
        t0 = time.perf_counter()
        v6 = nu_from_enumeration(6, 3)
        t6 = time.perf_counter() - t0
        t0 = time.perf_counter()
        v7 = nu_from_enumeration(7, 3)
        t7 = time.perf_counter() - t0
        assert v6.value.as_rational() == F(3089, 85085)
        assert v7.value.as_rational() == F(54097, 3879876)
        assert t6 < 60 and t7 < 60
        info["note"] = (f"nu(6;3,0) = 3089/85085 and nu(7;3,0) = 54097/3879876 "
                        f"by enumeration in {t6:.2f} s / {t7:.2f} s (limit 60 s each)")


def test_criterion_02_symbolic_small_values():
    with criterion(2) as info:
        tab = nu_enumeration_table(5, 3)
        for r in range(1, 6):
            assert tab[r].value == SymbolicValue(*reference.SMALL_NU_D3[r]), r
        matched = 0
        for r, dec in reference.SMALL_NU_D3_DECIMALS.items():
            v = nu_closed_form(r, 3).value
            if len(dec) <= 12:
                assert abs(v.approx()[0] - F(dec)) < F(1, 10**9), r
            else:
                assert sig_round(v.as_rational(), 15, "half_up") == dec, r
            matched += 1
        _suite_green("theorem1")
        info["note"] = (f"nu(1..5;3,0) match coefficient-wise; {matched} printed "
                        f"decimals within 1e-9")


def test_criterion_03_main_table_both_routes():
    with criterion(3) as info:
        t0 = time.perf_counter()
        _suite_green("appendix2")   # 73 rows: closed route, enumeration route,
        dt = time.perf_counter() - t0  # and the 15-digit decimal column
        assert dt < 300
        info["note"] = (f"73 rows r = 8..80 exact by both routes with all "
                        f"printed digits, in {dt:.1f} s (limit 300 s)")


def test_criterion_04_modulus_two():
    with criterion(4) as info:
        assert nu_from_enumeration(4, 2).value.as_rational() == F(2, 45)
        assert nu_closed_form(4, 2).value.as_rational() == F(2, 45)
        for r in range(5, 17):
            want = F(8, (2 * r - 3) * (2 * r - 1) * (2 * r + 1))
            assert nu_closed_form(r, 2).value.as_rational() == want, r
            dec = reference.NU_TABLE_D2[r][1]
            assert abs(want - F(dec)) <= F(1, 10**10), r
        tab = nu_enumeration_table(3, 2)
        assert tab[1].value == symbolic(6, 0, 0, -8)
        assert tab[2].value == symbolic(F(-1132, 105), 0, 0, 16)
        assert tab[3].value == symbolic(F(599, 105), 0, 0, -8)
        _suite_green("theorem2")
        info["note"] = ("nu(4;2,0) = 2/45; closed formula and printed decimals "
                        "for r = 5..16 (tolerance 1e-10); nu(1..3;2,0) symbolic "
                        "via enumeration")


def test_criterion_05_slice_areas_and_partition():
    with criterion(5) as info:
        for k in range(1, 51):
            assert area((k,)) == single_slice_area(k), k
        total = F(0)
        for K in range(1, 101):
            total += area((K,))
            assert F(1, 2) - total == F(2, (K + 1) * (K + 2)), K
        _suite_green("lemma7")
        info["note"] = ("one-index areas exact for k <= 50; partition "
                        "remainder 2/((K+1)(K+2)) exact for K <= 100")


def test_criterion_06_emptiness_catalogues():
    with criterion(6) as info:
        _suite_green("lemma15")     # pairs k,m <= 30; triples k,m,n <= 13
        from fareygaps import continuant, is_empty
        w7 = (3, 2, 2, 2, 2, 1, 6)
        w8 = (3, 2, 2, 2, 2, 2, 1, 6)
        assert is_empty(w7) and continuant(w7) == 1
        assert is_empty(w8) and continuant(w8) == -1
        info["note"] = ("pair catalogue k,m <= 30 and triple catalogue "
                        "k,m,n <= 13 reproduced; empty regions with final "
                        "continuants +1/-1 confirmed")


def test_criterion_07_subtree_closed_forms():
    with criterion(7) as info:
        _suite_green("trees")       # node forms n <= 20, leaf forms, pentagon
        for n in range(1, 6):
            assert len(region(pentagon_witness(n)).vertices) == 5, n
        info["note"] = ("recurring-node areas n = 1..20, leaf closed forms "
                        "n = 1..10 in all residue cases, five-vertex witness "
                        "n = 1..5")


def test_criterion_08_polygon_catalogue():
    with criterion(8) as info:
        _suite_green("appendix1")
        info["note"] = ("all 22 catalogued polygon families (superset of the "
                        "stated 18) match region() for n = 1..5 with canonical "
                        "vertex order")


def test_criterion_09_degenerate_catalogue():
    with criterion(9) as info:
        _suite_green("appendix3")
        info["note"] = ("degenerate-tuple catalogue equal for every listed "
                        "r-pattern, including the final-continuant column")


def test_criterion_10_empirical_scan_both_orders():
    with criterion(10) as info:
        printed_total = reference.SCAN_TABLE["coloured_total"]
        assert coloured_total(30_000, 3, 0) == printed_total
        assert coloured_total(300_000, 3, 0) == \
            reference.SCAN_TABLE["coloured_total_at_labelled_Q"]

        t0 = time.perf_counter()
        h_small = scan(ScanConfig(30_000, 3, 0, r_max=40), backend="numba")
        t_small = time.perf_counter() - t0
        assert t_small <= 30
        assert h_small.coloured_total == printed_total

        rows = reference.SCAN_TABLE["rows"]
        mismatched = [r for r, (c, _) in rows.items() if h_small.counts[r] != c]
        assert mismatched == [2], mismatched
        # the one mismatching printed count contradicts its own printed
        # ratio; the rescanned count reproduces that ratio to all 10 places
        assert h_small.counts[2] == reference.SCAN_TABLE["row2_consistent_count"]
        ratio2 = F(h_small.counts[2], h_small.coloured_total)
        assert any(render_fixed(ratio2, 10, m) == rows[2][1] for m in MODES)
        assert dict(h_small.counts) == reference.SCAN_COUNTS_30000
        assert h_small.overflow == reference.SCAN_30000_OVERFLOW_PAST_40
        assert h_small.fraction_total == reference.SCAN_30000_FRACTION_TOTAL

        t0 = time.perf_counter()
        h_large = scan(ScanConfig(300_000, 3, 0, r_max=40), backend="numba")
        t_large = time.perf_counter() - t0
        assert t_large <= 1800
        assert h_large.coloured_total == \
            reference.SCAN_TABLE["coloured_total_at_labelled_Q"]
        assert all(h_large.counts[r] != c for r, (c, _) in rows.items())

        info["note"] = (f"printed table belongs to Q = 30000, not its label "
                        f"Q = 300000 (coloured totals {printed_total} vs "
                        f"{h_large.coloured_total}); 13/14 counts bit-exact, "
                        f"printed row 2 contradicts its own ratio column and "
                        f"the rescan ({h_small.counts[2]}) reproduces the "
                        f"ratio to all 10 places; scans {t_small:.1f} s / "
                        f"{t_large:.0f} s (limits 30 s / 30 min)")


def test_criterion_11_property_suites():
    with criterion(11) as info:
        results = run_suite("identities", seed=DEFAULT_SEED)
        assert all(r.ok and r.detail == "1000/1000" for r in results)

        rng = random.Random(DEFAULT_SEED)
        nonempty = 0
        for _ in range(1000):
            t = tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 8)))
            a, b = reverse_map_check(t)
            assert a == b, t
            nonempty += a > 0

        nodes_checked = 0
        trees_built = 0
        while nodes_checked < 1000:
            seed = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 3)))
            if admissibility_check(seed, SPEC3) != LIVE or area(seed) == 0:
                continue
            tree = build_tree(seed, SPEC3, len(seed) + 4, max_index=24)
            assert tree.conservation_violations() == [], seed
            nodes_checked += sum(1 for n in tree.nodes() if n.expanded)
            trees_built += 1
            assert trees_built < 400  # the walk must terminate long before this

        scans = 0
        while scans < 1000:
            Q = rng.randint(2, 90)
            D = rng.randint(2, 7)
            c0 = rng.randint(0, D - 1)
            if Q < D:
                continue
            h = scan(ScanConfig(Q, D, c0, r_max=25), backend="python")
            assert h.fraction_total == int(phi_sieve(Q).sum())
            assert h.coloured_total == coloured_total(Q, D, c0)
            assert sum(h.counts.values()) + h.overflow == h.coloured_total
            if h.coloured_total:
                weighted = sum((r + 1) * c for r, c in h.counts.items())
                assert weighted + h.overflow_fractions == h.fraction_total
            scans += 1

        info["note"] = (f"seeded randomized checks all green: 4x1000 continuant "
                        f"identities, 1000 area reversals ({nonempty} non-empty), "
                        f"{nodes_checked} tree-node conservation checks over "
                        f"{trees_built} trees, 1000 scan conservation checks")


def test_criterion_12_distribution_sums():
    with criterion(12) as info:
        s = sum(nu_closed_form(r, 3).value.approx()[0] for r in range(1, 201))
        w = sum((r + 1) * nu_closed_form(r, 3).value.approx()[0]
                for r in range(1, 201))
        b_norm = normalization_tail_bound()
        b_weight = weighted_tail_bound()
        assert 0 < 1 - s < b_norm
        assert 0 < 4 - w < b_weight
        info["note"] = (f"1 - sum nu(r <= 200) = {float(1 - s):.3e} < bound "
                        f"{float(b_norm):.3e}; 4 - weighted sum = "
                        f"{float(4 - w):.3e} < bound {float(b_weight):.3e}")
