"""Acceptance criteria, one test per criterion, each reporting PASS or FAIL."""
import itertools
import math
import os
import random
import time

import pytest

from subword_entropy.entropy import maxocc, maxocc_lower_bound, maxocc_upper_bound
from subword_entropy.genfunc import (
    c_recurrence_value,
    gf_construct,
    gf_series,
    occ_table_periodic,
    periodic_entropy_estimate,
)
from subword_entropy.occurrence import occ_dp, occ_runs
from subword_entropy.poly import BivariatePoly
from subword_entropy.search import SearchInterrupted, limit_lower_bound, min_entropy_exhaustive, verify_superadditivity
from subword_entropy.tables import achiever_classes
from subword_entropy.words import words_of_length

PUBLISHED_MINIMA = (1, 1, 2, 2, 3, 5, 6, 9, 16, 22, 33, 52, 72, 108, 162, 252)

x, y = BivariatePoly.x(), BivariatePoly.y()
PUBLISHED_GF = {
    ("0011", "01"): (1 - x, (1 - x) ** 2 - 4 * x * y),
    ("01", "01"): (1 - x, (1 - x) ** 2 - x * y),
    ("000111", "0011"): ((1 - x) ** 3, (1 - x) ** 4 - 9 * x * (1 + 2 * x) ** 2 * y),
    ("0001100111", "0011"): (
        (1 - x) ** 3 - x * (9 * x**2 + 78 * x + 13) * y,
        (1 - x) ** 4 - 9 * x * (1 - 6 * x) ** 2 * y**2 - x * (9 * x + 16) * (21 * x + 4) * y,
    ),
}


def test_criterion_1_table_values(exhaustive_results, report_criterion):
    results, timings = exhaustive_results
    values = tuple(results[n].min_maxocc for n in range(1, 17))
    classes_ok = all({a.text for a in results[n].achievers} == achiever_classes(n) for n in range(1, 17))
    small = sum(timings[n] for n in range(1, 13))
    total = sum(timings.values())
    ok = values == PUBLISHED_MINIMA and classes_ok and small <= 10 and total <= 600
    report_criterion("1", ok, f"n<=12 in {small:.1f}s, n<=16 in {total:.1f}s")
    assert values == PUBLISHED_MINIMA
    assert {a.text for a in results[3].achievers} == {"001", "010"}
    assert classes_ok
    assert small <= 10 and total <= 600


def test_criterion_2_witnesses(report_criterion):
    w10 = {u.text for u in maxocc("0110001110").witnesses}
    w6 = {u.text for u in maxocc("011001").witnesses}
    w5 = {u.text for u in maxocc("01110").witnesses}
    ok = "0110" in w10 and "01" in w6 and w5 == {"010", "0110"}
    report_criterion("2", ok)
    assert ok


def test_criterion_3_oracle_equivalence(report_criterion):
    t0 = time.perf_counter()
    mismatches = 0
    for n in range(11):
        words = ["".join(p) for p in itertools.product("01", repeat=n)]
        subwords = ["".join(p) for k in range(n + 1) for p in itertools.product("01", repeat=k)]
        for w in words:
            for u in subwords:
                mismatches += occ_runs(w, u) != occ_dp(w, u)
    rng = random.Random(20240)
    for _ in range(10_000):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 30)))
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, len(w))))
        mismatches += occ_runs(w, u) != occ_dp(w, u)
    elapsed = time.perf_counter() - t0
    report_criterion("3", mismatches == 0 and elapsed <= 120, f"{mismatches} mismatches, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed <= 120


def test_criterion_4_bounds(report_criterion):
    t0 = time.perf_counter()
    lower = maxocc_lower_bound(14)
    lower = -(-lower.numerator // lower.denominator)
    upper = maxocc_upper_bound(14)
    assert upper == math.comb(14, 7)
    violations = [w.text for w in words_of_length(14) if not lower <= maxocc(w).maxocc <= upper]
    # words starting with 1 are complements of these, with the same maxocc
    elapsed = time.perf_counter() - t0
    report_criterion("4", not violations and elapsed <= 300, f"{len(violations)} violations, {elapsed:.1f}s")
    assert not violations
    assert elapsed <= 300


def test_criterion_5_published_gfs(report_criterion):
    t0 = time.perf_counter()
    ok = True
    for (w, v), (num, den) in PUBLISHED_GF.items():
        gf = gf_construct(w, v)
        ok &= gf.num == num and gf.den == den
    elapsed = time.perf_counter() - t0
    report_criterion("5", ok and elapsed <= 60, f"{elapsed:.2f}s")
    assert ok
    assert elapsed <= 60


def test_criterion_6_series_triangle(report_criterion):
    t0 = time.perf_counter()
    rng = random.Random(6)
    pairs = list(PUBLISHED_GF)
    while len(pairs) < 24:
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 8)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
        pairs.append((w, v))
    bad = [p for p in pairs if gf_series(gf_construct(*p), 12, 12) != occ_table_periodic(*p, 12, 12)]
    elapsed = time.perf_counter() - t0
    report_criterion("6", not bad and elapsed <= 300, f"{len(pairs)} pairs, {elapsed:.1f}s")
    assert not bad
    assert elapsed <= 300


def test_criterion_7_closed_forms(report_criterion):
    a = occ_table_periodic("0011", "01", 20, 20)
    b = occ_table_periodic("01", "01", 20, 20)
    bad = []
    for m in range(21):
        for r in range(21):
            closed = math.comb(m + r, m - r) if m >= r else 0
            if a[m, r] != 4**r * closed or b[m, r] != closed or a[m, r] != 4**r * b[m, r]:
                bad.append((m, r))
    c = occ_table_periodic("000111", "0011", 15, 15)
    boundary = all(c[m, 0] == 1 for m in range(16))
    recurrence_bad = [
        (m, r) for m in range(1, 16) for r in range(1, 16) if c_recurrence_value(c.table, m, r) != c[m, r]
    ]
    ok = not bad and boundary and not recurrence_bad
    report_criterion("7", ok, "a, b closed forms; c recurrence with +36*c[m-3][r-1], see the printed-sign check below")
    assert not bad
    assert boundary
    assert not recurrence_bad


@pytest.mark.xfail(strict=True, reason="printed recurrence has -36*c[m-3][r-1]; exact counts satisfy +36 (first mismatch at m=3, r=1)")
def test_criterion_7_printed_recurrence_sign(report_criterion):
    c = occ_table_periodic("000111", "0011", 15, 15)
    bad = [
        (m, r)
        for m in range(1, 16)
        for r in range(1, 16)
        if c_recurrence_value(c.table, m, r, c3_coefficient=-36) != c[m, r]
    ]
    report_criterion("7 (recurrence exactly as printed)", not bad, f"first mismatch at (m, r) = {bad[0]}" if bad else "")
    assert not bad


def test_criterion_8_per_letter_limits(report_criterion):
    t0 = time.perf_counter()
    cases = [
        ("0011", "01", 256, (0.62, 0.64), 2 ** -0.5),
        ("01", "01", 512, (0.68, 0.70), 5 ** -0.5),
        ("000111", "0011", 170, (0.63, 0.655), 0.6597),
    ]
    details, ok = [], True
    for w, v, m, (lo, hi), alpha in cases:
        est = periodic_entropy_estimate(w, v, m)
        good = lo <= est.per_letter_bits <= hi and abs(est.ratio - alpha) <= 0.02
        ok &= good
        details.append(f"{w}/{v}: {est.per_letter_bits:.4f}, ratio {est.ratio:.4f}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed <= 600
    report_criterion("8", ok, "; ".join(details))
    assert ok


def test_criterion_9_superadditivity(exhaustive_results, report_criterion):
    results, _ = exhaustive_results
    table = {n: r.min_maxocc for n, r in results.items()}
    violations = verify_superadditivity(table)
    bound = limit_lower_bound(table)
    ok = not violations and bound >= 0.498
    report_criterion("9", ok, f"limit lower bound {bound:.4f}")
    assert not violations
    assert bound >= 0.498


def test_criterion_10_search_engineering(tmp_path, report_criterion):
    n = 12
    base = min_entropy_exhaustive(n, workers=1)
    workers = max(2, os.cpu_count() or 1)
    parallel = min_entropy_exhaustive(n, workers=workers)
    no_hints = min_entropy_exhaustive(n, use_hints=False)
    path = tmp_path / "cp.json"
    with pytest.raises(SearchInterrupted):
        min_entropy_exhaustive(n, checkpoint_path=path, chunk_size=128, max_chunks=5)
    resumed = min_entropy_exhaustive(n, checkpoint_path=path, chunk_size=128, resume=True)
    ok = base == parallel == no_hints == resumed
    report_criterion("10", ok, f"{workers} workers, pruning off, kill/resume")
    assert ok
