"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
All tolerances are pinned below.
"""

import io
import json
import random
import sys
import time

import pytest

from genus3 import bounds
from genus3.algebra import make_field
from genus3.cli import run
from genus3.curves import (
    PlaneQuartic,
    count_points,
    count_points_bruteforce,
    derive_f2_fnc_quartic,
    hv_count,
    is_frobenius_nonclassical,
    is_smooth,
    sv_bound,
)
from genus3.errors import ConditionNotSquare, LineOnCurve, SingularEllipticFactor
from genus3.families import (
    check_hlp_relation,
    exhaustive_f2_scan,
    family_curve,
    hlp_quartic,
    q8_form,
    special_curve,
)
from genus3.forms import TernaryForm, monomials, partial, variables
from genus3.zeta import l_polynomial_from_counts, predict_count, weil_check

TIME_TABLE = 1.0
TIME_WITNESSES = 60.0
TIME_SCAN = 10.0
TIME_ZETA = 30.0
TIME_Q97 = 60.0
PROPERTY_CASES = 200

# independent transcription of the best known N_q(3), q < 100
EXPECTED_TABLE = {
    2: 7, 3: 10, 4: 14, 5: 16, 7: 20, 8: 24, 9: 28, 11: 28, 13: 32, 16: 38,
    17: 40, 19: 44, 23: 48, 25: 56, 27: 56, 29: 60, 31: 62, 32: 64, 37: 72,
    41: 78, 43: 80, 47: 87, 49: 92, 53: 96, 59: 102, 61: 107, 64: 113,
    67: 116, 71: 120, 73: 122, 79: 131, 81: 136, 83: 136, 89: 144, 97: 155,
}

EXPECTED_ITEMS = {
    2: "ad", 3: "f", 4: "b", 5: "bd", 7: "bf", 8: "c", 9: "c", 11: "be",
    13: "bf", 16: "b", 17: "bd", 19: "bc", 23: "g", 25: "bc", 27: "e",
    29: "c", 31: "f", 37: "d", 41: "c", 43: "f", 47: "c", 49: "c", 53: "c",
    59: "g", 61: "c", 64: "c", 67: "c", 71: "c", 73: "f", 79: "c", 81: "c",
    83: "e", 89: "c", 97: "c",
}

WITNESS_COUNTS = [
    ("example4_f2", None, None, 7),
    ("misprint_f2", None, None, 0),
    ("q8_f8", None, None, 24),
    ("fermat4_f9", None, None, 28),
    ("C", 29, (2,), 60),
    ("C", 49, (-1,), 92),
    ("C", 53, (2,), 96),
    ("C", 67, (30,), 116),
    ("C", 71, (37,), 120),
    ("C", 89, (13,), 144),
    ("C", 43, (10,), 80),
    ("D", 31, (4, 2), 62),
    ("D", 61, (29, 34), 107),
    ("D", 73, (2, 48), 122),
    ("D", 79, (11, 8), 131),
    ("D", 97, (56, 79), 155),
    ("X", 41, (-7, 8), 78),
    ("Y", 59, (4, 6), 102),
    ("HLP", 37, (7, 0, 2), 72),
    ("HLP", 83, (5, 4, 2), 136),
]


def _field(q):
    return {49: make_field(7, 2)}.get(q) or make_field(q)


def _witness_curve(name, q, params):
    if q is None:
        return special_curve(name)
    if name == "HLP":
        return hlp_quartic(_field(q), *params)
    return family_curve(name, _field(q), params)


def _verdict(ok):
    return "PASS" if ok else "FAIL"


def test_criterion_1_bound_table(report_line):
    t0 = time.perf_counter()
    wrong = {}
    for q, expected in EXPECTED_TABLE.items():
        buf = io.StringIO()
        code = run(["bound", "--q", str(q)], buf)
        best = json.loads(buf.getvalue())["results"]["best"] if code == 0 else None
        if best != expected:
            wrong[q] = best
    dt = time.perf_counter() - t0
    ok = not wrong and len(EXPECTED_TABLE) == 35 and dt < TIME_TABLE
    report_line(f"CRITERION 1: {_verdict(ok)} bound table 35/35 rows exact, mismatches={wrong}, {dt:.2f}s")
    assert ok


def test_criterion_2_attribution(report_line):
    bad = {}
    for q, letters in EXPECTED_ITEMS.items():
        achieved = set(bounds.best_upper_bound(q).achieved_by)
        if not set(letters) <= achieved:
            bad[q] = sorted(achieved)
    r32 = bounds.best_upper_bound(32)
    lemma_only = r32.achieved_by == ("lemma",) and r32.best == 64
    ok = not bad and lemma_only
    report_line(f"CRITERION 2: {_verdict(ok)} item attribution, bad={bad}, q=32 lemma only={lemma_only}")
    assert ok


def test_criterion_3_witness_counts(report_line):
    t0 = time.perf_counter()
    wrong = []
    for name, q, params, expected in WITNESS_COUNTS:
        N = count_points(_witness_curve(name, q, params)).N
        if N != expected:
            label = name if q is None else f"{name}{params}/F_{q}"
            wrong.append(f"{label}: got {N}, expected {expected}")
    dt = time.perf_counter() - t0
    ok = not wrong and dt < TIME_WITNESSES
    ok_rows = len(WITNESS_COUNTS) - len(wrong)
    report_line(f"CRITERION 3: {_verdict(ok)} witness counts {ok_rows}/{len(WITNESS_COUNTS)} exact, {dt:.1f}s; {wrong}")
    assert ok, wrong


def test_criterion_4_f2_scan(report_line):
    t0 = time.perf_counter()
    s = exhaustive_f2_scan()
    dt = time.perf_counter() - t0
    hyperelliptic_bound = 2 * 2 + 2
    ok = (
        s.forms == 2**15 - 1
        and s.max_smooth_count == 7
        and s.count_histogram.get(7, 0) > 0
        and hyperelliptic_bound < 7
        and not s.mismatches
        and dt < TIME_SCAN
    )
    report_line(
        f"CRITERION 4: {_verdict(ok)} F_2 scan, {s.smooth_forms} smooth forms in {s.smooth_orbits} orbits, "
        f"max {s.max_smooth_count} points, hyperelliptic <= {hyperelliptic_bound}, {dt:.2f}s"
    )
    assert ok


def test_criterion_5_fnc(report_line):
    derived = derive_f2_fnc_quartic()
    bit_exact = derived.F == q8_form(make_field(2)) and len(derived.F) == 9
    flags = (
        is_frobenius_nonclassical(special_curve("q8_f8")),
        is_frobenius_nonclassical(special_curve("fermat4_f9")),
        is_frobenius_nonclassical(special_curve("example4_f2")),
    )
    s = exhaustive_f2_scan()
    fnc_ok = bool(s.fnc_counts) and all(N == hv_count(4, 2) for _, N in s.fnc_counts)
    ok = bit_exact and flags == (True, True, False) and fnc_ok
    report_line(
        f"CRITERION 5: {_verdict(ok)} derive bit-exact={bit_exact}, FNC flags={flags}, "
        f"smooth FNC orbits over F_2={len(s.fnc_counts)} all with {hv_count(4, 2)} points={fnc_ok}"
    )
    assert ok


def test_criterion_6_zeta(report_line):
    t0 = time.perf_counter()
    cases = [
        ("q8_f8", 8, (1, 15, 99, 365, 792, 960, 512)),
        ("fermat4_f9", 9, (1, 18, 135, 540, 1215, 1458, 729)),
    ]
    notes, ok = [], True
    for name, q, expected in cases:
        C = special_curve(name)
        N = [count_points(C, k).N for k in (1, 2, 3)]
        brute2 = count_points_bruteforce(C, 2).N
        L = l_polynomial_from_counts(q, *N)
        good = L.b == expected and brute2 == N[1] and bool(weil_check(L))
        ok &= good
        notes.append(f"{name} counts={N} L={list(L.b)}")
    dt = time.perf_counter() - t0
    ok &= dt < TIME_ZETA
    report_line(f"CRITERION 6: {_verdict(ok)} {'; '.join(notes)}, {dt:.1f}s")
    assert ok


def _random_quartic(fld, rng):
    while True:
        F = TernaryForm(fld, 4, {e: fld.random_element(rng) for e in monomials(4)})
        if not F.is_zero():
            return PlaneQuartic(F)


def _random_smooth(fld, rng):
    while True:
        C = _random_quartic(fld, rng)
        if is_smooth(C):
            return C


def _suite_field_axioms(rng):
    fields = [make_field(p, k) for p, k in ((2, 1), (2, 3), (3, 2), (5, 1), (7, 2), (97, 1), (2, 6))]
    for i in range(PROPERTY_CASES):
        fld = fields[i % len(fields)]
        a, b, c = (fld.random_element(rng) for _ in range(3))
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == fld.zero and a * fld.one == a
        if a != fld.zero:
            assert a * a.inverse() == fld.one
    return PROPERTY_CASES


def _suite_fast_vs_brute(rng):
    fields = [make_field(p, k) for p, k in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))]
    done = 0
    while done < PROPERTY_CASES:
        fld = fields[done % len(fields)]
        C = _random_quartic(fld, rng)
        k = 1 + done % 2
        try:
            fast = count_points(C, k).N
        except LineOnCurve:
            continue
        assert fast == count_points_bruteforce(C, k).N
        done += 1
    return done


def _suite_stohr_voloch(rng):
    done = 0
    for q in (3, 5, 7):
        fld = make_field(q)
        n = 0
        while n < PROPERTY_CASES // 3 + 1:
            C = _random_smooth(fld, rng)
            if is_frobenius_nonclassical(C):
                continue
            assert count_points(C).N <= sv_bound(q)
            n += 1
        done += n
    return done


def _suite_euler(rng):
    fields = [make_field(p, k) for p, k in ((5, 1), (7, 1), (3, 2), (11, 1), (13, 1))]
    for i in range(PROPERTY_CASES):
        fld = fields[i % len(fields)]
        d = 1 + rng.randrange(6)
        F = TernaryForm(fld, d, {e: fld.random_element(rng) for e in monomials(d)})
        x, y, z = variables(fld)
        assert x * partial(F, 0) + y * partial(F, 1) + z * partial(F, 2) == F * fld(d)
    return PROPERTY_CASES


def _suite_hlp(rng):
    done = 0
    for q in (13, 17, 37):
        fld = make_field(q)
        n = 0
        while n < PROPERTY_CASES // 3 + 1:
            lam, a, b = (rng.randrange(q) for _ in range(3))
            try:
                C = hlp_quartic(fld, lam, a, b)
            except (ConditionNotSquare, SingularEllipticFactor):
                continue
            if not is_smooth(C):
                continue
            assert check_hlp_relation(fld, lam, a, b)
            n += 1
        done += n
    return done


def _suite_l_round_trip(rng):
    done = 0
    for q in (3, 5, 7):
        fld = make_field(q)
        for _ in range(PROPERTY_CASES // 3 + 1):
            C = _random_smooth(fld, rng)
            N = [count_points(C, k).N for k in (1, 2, 3, 4)]
            L = l_polynomial_from_counts(q, *N[:3])
            assert weil_check(L)
            assert [predict_count(L, r) for r in (1, 2, 3, 4)] == N
            done += 1
    return done


SUITES = [
    ("field axioms", _suite_field_axioms),
    ("fast count = brute", _suite_fast_vs_brute),
    ("Stohr-Voloch", _suite_stohr_voloch),
    ("Euler relation", _suite_euler),
    ("HLP identity", _suite_hlp),
    ("L round trip", _suite_l_round_trip),
]


def test_criterion_7_property_suites(report_line):
    results, failed = [], []
    for i, (label, suite) in enumerate(SUITES):
        try:
            n = suite(random.Random(7000 + i))
            results.append(f"{label}={n}")
            if n < PROPERTY_CASES:
                failed.append(label)
        except AssertionError:
            results.append(f"{label}=FAILED")
            failed.append(label)
    ok = not failed
    report_line(f"CRITERION 7: {_verdict(ok)} {', '.join(results)}")
    assert ok, failed


def test_criterion_8_q97_zeta(report_line):
    t0 = time.perf_counter()
    C = family_curve("D", make_field(97), (56, 79))
    N = [count_points(C, k).N for k in (1, 2, 3)]
    L = l_polynomial_from_counts(97, *N)
    dt = time.perf_counter() - t0
    ok = N[0] == 155 and bool(weil_check(L)) and dt < TIME_Q97
    report_line(f"CRITERION 8: {_verdict(ok)} D_(56,79)/F_97 counts={N} L={list(L.b)}, {dt:.1f}s")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
