"""
Acceptance suite: nine end-to-end criteria, each printing one PASS/FAIL
line.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines
as they print; every criterion also asserts, so plain ``pytest`` verdicts
carry the same information.
"""
import time

from permbij.perm import catalan, enumerate_avoiders
from permbij.verify import run_suite, stats_table


GOLDEN_TEXT = "1 4 2 3 7 5 8 6"

_CATALAN_THROUGH_10 = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def _criterion(name, ok, elapsed=None, budget=None):
    status = "PASS" if ok else "FAIL"
    timing = ""
    if elapsed is not None:
        timing = f"  [{elapsed:.3f}s" + (f" < {budget}s]" if budget else "]")
    print(f"{status} {name}{timing}")
    assert ok, name


def _run(names, n_max=9, n_min=1):
    start = time.perf_counter()
    reports = run_suite(n_min, n_max, names)
    elapsed = time.perf_counter() - start
    return reports, elapsed


def test_c1_golden_worked_example():
    from permbij.grid import l_corners, rcl_corners
    from permbij.maps import gamma_iterative
    from permbij.perm import parse_permutation, reverse_complement
    from permbij.rsk import dyck_from_tableaux, rsk_tableaux

    def compute():
        sigma = parse_permutation(GOLDEN_TEXT)
        ins, rec = rsk_tableaux(sigma)
        return (
            l_corners(sigma),
            gamma_iterative(sigma),
            ins,
            rec,
            dyck_from_tableaux(ins, rec),
            reverse_complement(sigma),
            rcl_corners(sigma),
        )

    corners, image, ins, rec, word, rc, rcl = compute()
    ok = (
        corners == [(7, 6), (5, 5), (2, 3)]
        and image == (7, 8, 6, 4, 3, 5, 2, 1)
        and (ins.row1, ins.row2) == ((1, 2, 3, 5, 6), (4, 7, 8))
        and (rec.row1, rec.row2) == ((1, 2, 4, 5, 7), (3, 6, 8))
        and word[:8] == "uuuduudd"
        and word[8:] == "ududdudd"
        and rc == (3, 1, 4, 2, 6, 7, 5, 8)
        and rcl == [(4, 3), (7, 6), (8, 8)]
    )
    best = float("inf")
    for _ in range(5):
        start = time.perf_counter()
        compute()
        best = min(best, time.perf_counter() - start)
    _criterion("criterion-1 golden worked example", ok and best < 0.001, best, 0.001)


def test_c2_nested_template_realizes_back():
    reports, elapsed = _run(["fact2"])
    ok = (
        all(r.passed for r in reports)
        and sum(r.cases for r in reports) == 6917
        and elapsed < 5.0
    )
    _criterion("criterion-2 nested template realizes back (n<=9)", ok, elapsed, 5)


def test_c3_rewriting_routes_agree():
    reports, elapsed = _run(["fact3-route-agreement"])
    _criterion(
        "criterion-3 rewriting-map routes agree (n<=9)",
        all(r.passed for r in reports),
        elapsed,
    )


def test_c4_path_region_and_tableau_rows():
    reports, elapsed = _run(["lemma1", "lemma3"])
    _criterion(
        "criterion-4 path region is diagonal L's; tableau rows match corners (n<=9)",
        all(r.passed for r in reports),
        elapsed,
    )


def test_c5_corner_and_slide_flip_templates_match_path():
    reports, elapsed = _run(["theorem1-route", "theorem2-route"])
    _criterion(
        "criterion-5 corner and slide-flip templates equal the path template (n<=9)",
        all(r.passed for r in reports),
        elapsed,
    )


def test_c6_tableau_route_equals_rewriting_after_half_turn():
    reports, elapsed = _run(["theorem3"])
    ok = all(r.passed for r in reports) and elapsed < 30.0
    _criterion(
        "criterion-6 tableau route equals rewriting route after half-turn (n<=9)",
        ok,
        elapsed,
        30,
    )


def test_c7_statistics_preserved_and_inversion_commutes():
    reports, elapsed = _run(
        ["fixed-points", "excedances", "inverse-commute-gamma", "inverse-commute-theta"]
    )
    _criterion(
        "criterion-7 statistics preserved, inversion commutes (n<=9)",
        all(r.passed for r in reports),
        elapsed,
    )


def test_c8_bijectivity_and_catalan_counts_through_10():
    start = time.perf_counter()
    reports = run_suite(
        1, 10, ["bijectivity-gamma", "bijectivity-theta", "catalan-counts"]
    )
    counts = [
        sum(1 for _ in enumerate_avoiders(n, "321")) for n in range(1, 11)
    ]
    elapsed = time.perf_counter() - start

    # closed form against the recurrence, independently of the enumeration
    recurrence = [1]
    for m in range(10):
        recurrence.append(sum(recurrence[i] * recurrence[m - i] for i in range(m + 1)))
    ok = (
        all(r.passed for r in reports)
        and counts == _CATALAN_THROUGH_10
        and [catalan(n) for n in range(1, 11)] == _CATALAN_THROUGH_10
        and recurrence[1:] == _CATALAN_THROUGH_10
        and elapsed < 60.0
    )
    _criterion("criterion-8 bijectivity and catalan counts (n<=10)", ok, elapsed, 60)


def test_c9_joint_statistic_tables_coincide():
    start = time.perf_counter()
    ok = all(
        stats_table(n, "321").rows == stats_table(n, "132").rows
        for n in range(1, 10)
    )
    elapsed = time.perf_counter() - start
    _criterion("criterion-9 joint statistic tables coincide (n<=9)", ok, elapsed)
