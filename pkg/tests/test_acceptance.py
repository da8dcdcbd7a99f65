"""Acceptance suite: one test per criterion, exact tolerances throughout.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Every comparison is exact integer equality; there are no
tolerance bands anywhere.
"""

import random

import pytest

from hermgenus import families, oracle, spectrum
from hermgenus.gf import make_ctx
from hermgenus.numthy import divisors, prime_power
from hermgenus.pgu import classify, identity, mat_inv, mat_mul, normalize, random_unitary

ORACLE_QS = (3, 4, 5, 7, 8, 9, 11, 13)
ORACLE_QS_EXTENDED = (16, 25, 27)
BUDGET = 20000


def _report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[{name}] {status}" + (f" {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_ac1_table1_membership():
    report = spectrum.check_table1()
    missing = [
        (q, g) for q, entries in report.rows for g, present, _ in entries if not present
    ]
    total = sum(len(entries) for _, entries in report.rows)
    _report(
        "AC1 table-1 membership",
        report.all_present,
        f"{total - len(missing)}/{total} present" + (f", missing {missing}" if missing else ""),
    )


def test_ac2_genus_one_witnesses_at_13():
    entries = {e.genus: e for e in spectrum.compute_spectrum(13)}
    fams = {rec.family for rec in entries[1].witnesses} if 1 in entries else set()
    _report(
        "AC2 q=13 genus-1 witnesses",
        {"P34", "P36"} <= fams,
        f"witness families: {sorted(fams)}",
    )


@pytest.mark.parametrize("q", ORACLE_QS + ORACLE_QS_EXTENDED)
def test_ac3_formula_oracle_equivalence(q):
    reports = oracle.verify_q(q, budget=BUDGET)
    fails = [r for r in reports if r.status == "fail"]
    skipped = sum(1 for r in reports if r.status == "skipped")
    _report(
        f"AC3 formula=oracle q={q}",
        not fails,
        f"{len(reports) - len(fails) - skipped}/{len(reports)} ok, {skipped} over budget"
        + (f"; failures: {[(r.family, r.params, r.detail) for r in fails[:3]]}" if fails else ""),
    )


def test_ac4_endpoint_identities():
    bad = []
    for q in ORACLE_QS + ORACLE_QS_EXTENDED + (32, 125, 128, 243, 2187):
        if families.genus(q, "T31", {"a": 1, "b": 1, "c": 1, "e": 1}).genus != q * (q - 1) // 2:
            bad.append((q, "trivial"))
        full = {"a": q + 1, "b": q + 1, "c": q + 1, "e": (q + 1) ** 2}
        if families.genus(q, "T31", full).genus != 0:
            bad.append((q, "torus"))
        for w in divisors(q + 1):
            rec = families.genus(q, "T31", {"a": 1, "b": 1, "c": w, "e": w})
            if rec.genus != 1 + (q + 1) * (q - w - 1) // (2 * w):
                bad.append((q, w))
    _report("AC4 endpoint identities", not bad, f"violations: {bad[:5]}" if bad else "all hold")


def test_ac5_classifier_soundness_fixed_points():
    # part 1: every tame element of every oracle-closed group already has its
    # fixed-point count compared against i during AC3 (check_fixed_points=True
    # inside verify_q); recheck a representative family per q here explicitly
    mismatches = 0
    checked = 0
    for q in (4, 5, 8, 9, 13):
        pp = prime_power(q)
        ctx = make_ctx(*pp)
        fam = "P32" if q % 2 == 0 else "P33"
        params = families.enumerate_family(q, fam)[-1]
        gram, gens = families.generators(ctx, q, fam, params)
        clo = oracle.close_group(ctx, gram, gens, cap=BUDGET, check_fixed_points=True)
        mismatches += clo.fixed_point_mismatches
        checked += clo.order
    _report(
        "AC5a tame fixed points = i",
        mismatches == 0,
        f"{checked} elements checked, {mismatches} mismatches",
    )


def test_ac5_classifier_conjugation_invariance():
    bad = 0
    total = 0
    for q in (3, 4, 5, 8):
        pp = prime_power(q)
        ctx = make_ctx(*pp)
        rng = random.Random(q)
        ident = identity(ctx)
        while total < 1000 * ((3, 4, 5, 8).index(q) + 1):
            M = random_unitary(ctx, rng, 9)
            if M == ident:
                continue
            N = random_unitary(ctx, rng, 7)
            conj = normalize(ctx, mat_mul(ctx, mat_inv(ctx, N), mat_mul(ctx, M, N)))
            a, b = classify(ctx, M), classify(ctx, conj)
            total += 1
            if (a.kind, a.i, a.order) != (b.kind, b.i, b.order):
                bad += 1
    _report(
        "AC5b conjugation invariance",
        bad == 0,
        f"{total} random conjugations, {bad} mismatches",
    )


def test_ac6_integrality_sweep():
    qs = ORACLE_QS + ORACLE_QS_EXTENDED + (32, 125, 128, 243, 2187)
    count = 0
    for q in qs:
        for fam in families.FAMILY_ORDER:
            if not families.applicable(q, fam):
                continue
            for params in families.enumerate_family(q, fam):
                rec = families.genus(q, fam, params)  # raises on non-exact division
                assert 0 <= 2 * rec.genus <= q * (q - 1)
                count += 1
    _report("AC6 integrality sweep", count > 2000, f"{count} tuples, all exact and in range")


@pytest.mark.parametrize("q", (3, 4))
def test_ac7_necessity_spot_check(q):
    report = oracle.triangle_necessity_check(q)
    _report(
        f"AC7 necessity q={q}",
        report.ok,
        f"{report.subgroup_count} subgroups of the order-{report.stabilizer_order} stabilizer"
        + (f"; unexplained genera {report.missing}" if report.missing else ""),
    )
