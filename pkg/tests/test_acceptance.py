"""Acceptance gate: every criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion. Each criterion is a separate test; a failure prints
its FAIL line before the assertion fires.
"""

import random
import time
from functools import reduce
from math import gcd

import pytest

from numsem import (
    ClassKind,
    SurveyConfig,
    bound_ns3,
    bound_symmetric_not_ci,
    classify,
    exact_threshold_check,
    frobenius,
    generator_set,
    genus,
    numerator,
    power_sums,
    run_survey,
    verify_key_identity,
)
from numsem.cli import main as cli_main
from numsem.core import _apery_entries
from conftest import oracle_frobenius, oracle_genus

NUMERATOR_151 = {
    0: 1, 308: -1, 625: -1, 628: -1, 779: 1, 782: 1,
    3473: -1, 3476: -1, 3627: 1, 3630: 1, 3947: 1, 4255: -1,
}


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" -- {detail}" if detail and not ok else ""
    print(f"criterion {number} ({name}): {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed{suffix}"


@pytest.fixture(scope="module")
def survey_5_25():
    """Single-threaded classification of the full acceptance range, timed.

    run_survey itself raises on any law violation or dichotomy
    contradiction, so merely completing already certifies a lot.
    """
    start = time.monotonic()
    records, stats = run_survey(SurveyConfig(d_min=5, d_max=25, jobs=1))
    elapsed = time.monotonic() - start
    return records, stats, elapsed


def test_criterion_1_golden_frobenius_numbers():
    _apery_entries.cache_clear()  # time the cold path
    start = time.monotonic()
    values = {
        (5, 6, 7, 8): frobenius(generator_set([5, 6, 7, 8])),
        (7, 8, 9, 13): frobenius(generator_set([7, 8, 9, 13])),
        (8, 13, 15, 17): frobenius(generator_set([8, 13, 15, 17])),
        (151, 154, 157, 158): frobenius(generator_set([151, 154, 157, 158])),
    }
    elapsed = time.monotonic() - start
    expected = {
        (5, 6, 7, 8): 9,
        (7, 8, 9, 13): 19,
        (8, 13, 15, 17): 35,
        (151, 154, 157, 158): 3635,
    }
    report(
        1,
        "golden Frobenius numbers",
        values == expected and elapsed < 1.0,
        f"got {values} in {elapsed:.3f}s",
    )


def test_criterion_2_golden_bounds():
    cases = [
        ([5, 6, 7, 8], 8.76, 0.005),
        ([7, 8, 9, 13], 17.715, 0.005),
        ([8, 13, 15, 17], 34.198, 0.005),
        ([151, 154, 157, 158], 1814.1, 0.05),
    ]
    failures = []
    for gens, expected, tol in cases:
        got = bound_symmetric_not_ci(generator_set(gens))
        if abs(got - expected) > tol:
            failures.append((gens, got, expected))
    report(2, "golden lower bounds", not failures, str(failures))


def test_criterion_3_published_numerator_and_classification():
    g = generator_set([151, 154, 157, 158])
    poly = numerator(g)
    cls = classify(g)
    ok = (
        poly.as_dict() == NUMERATOR_151
        and cls.kind is ClassKind.SYMMETRIC_NOT_CI
        and cls.c == 4255
        and cls.a_list == (308, 625, 628, 3473, 3476)
    )
    report(3, "published numerator and classification", ok,
           f"terms {poly.as_dict()}, class {cls}")


def test_criterion_4_key_identity_exact():
    a_list = (308, 625, 628, 3473, 3476)
    pi4 = 576838724
    p1, p2, p3 = power_sums(a_list)
    ok = (
        verify_key_identity(a_list, 4255, pi4)
        and 8 * p3 - 6 * p2 * p1 + p1**3 == 24 * pi4
        and p1 == 8510 == 2 * 4255
    )
    report(4, "key identity in exact integers", ok,
           f"p=({p1},{p2},{p3}), 24*pi4={24 * pi4}")


def test_criterion_5_three_generator_bounds():
    cases = [
        ([5, 6, 7], 7.16, 0.005, 9),
        ([8, 9, 13], 23.02, 0.1, 28),
        ([151, 154, 157], 2847.5, 0.05, 11624),
    ]
    failures = []
    for gens, expected, tol, expected_f in cases:
        g = generator_set(gens)
        got = bound_ns3(g)
        fr = frobenius(g)
        if abs(got - expected) > tol or fr != expected_f:
            failures.append((gens, got, fr))
    report(5, "three-generator bounds", not failures, str(failures))


def test_criterion_6_survey_laws(survey_5_25):
    records, stats, elapsed = survey_5_25
    start = time.monotonic()
    violations = []
    not_ci = [r for r in records if r.kind == ClassKind.SYMMETRIC_NOT_CI.value]
    for r in not_ci:
        g = generator_set(r.generators)
        checks = (
            exact_threshold_check(r.c, g.pi)
            and r.frobenius >= bound_symmetric_not_ci(g)
            and verify_key_identity(r.a_list, r.c, g.pi)
            and r.maclaurin_ok
            and numerator(g).is_antipalindromic()
            and r.frobenius % 2 == 1
        )
        if not checks:
            violations.append(r.generators)
    total = elapsed + (time.monotonic() - start)
    ok = not violations and len(not_ci) == 157 and total < 60.0
    report(
        6,
        "survey-range laws (a)-(e)",
        ok,
        f"violations={violations}, instances={len(not_ci)}, runtime={total:.1f}s",
    )


def test_criterion_7_oracle_equivalence():
    rng = random.Random(1729)
    sets = []
    while len(sets) < 200:
        k = rng.choice((3, 4, 5))
        cand = sorted(rng.sample(range(2, 81), k))
        if cand[0] > 50 or reduce(gcd, cand) != 1:
            continue
        sets.append(tuple(cand))
    mismatches = []
    for cand in sets:
        g = generator_set(cand)
        if frobenius(g) != oracle_frobenius(cand) or genus(g) != oracle_genus(cand):
            mismatches.append(cand)
    report(7, "oracle equivalence on 200 random sets", not mismatches, str(mismatches))


def test_criterion_8_survey_determinism(tmp_path):
    serial = tmp_path / "serial.csv"
    parallel = tmp_path / "parallel.csv"
    code1 = cli_main(
        ["survey", "--min", "5", "--max", "20", "--out", str(serial), "--jobs", "1"]
    )
    code2 = cli_main(
        ["survey", "--min", "5", "--max", "20", "--out", str(parallel), "--jobs", "4"]
    )
    ok = code1 == code2 == 0 and serial.read_bytes() == parallel.read_bytes()
    report(8, "survey determinism across worker counts", ok)


def test_criterion_9_dichotomy(survey_5_25):
    # the fixture's survey classified every minimal quadruple in range and
    # would have raised ClassificationContradiction on any dichotomy breach
    records, stats, _ = survey_5_25
    classified = sum(
        stats.counts[key]
        for key in ("non_symmetric", "symmetric_ci", "symmetric_not_ci")
    )
    g = generator_set([8, 10, 12, 15])
    cls = classify(g)
    ok = (
        classified == 2663
        and cls.kind is ClassKind.SYMMETRIC_CI
        and sum(cls.relation_degrees) - g.sigma == frobenius(g)
    )
    report(9, "dichotomy holds; gluing example is CI", ok,
           f"classified={classified}, class={cls}")
