"""Acceptance gate: every criterion at its stated horizon and tolerance.

All arithmetic is exact, so every tolerance is equality.  One pass/fail line
per criterion is printed (visible with ``pytest -s``).
"""

import time

import pytest

from opid.bijections import CASE_TWIN, MAPS, phi, phi_inv, psi, psi_inv
from opid.identities import (
    BIJECTION_IDS,
    IDENTITY_TAGS,
    BijectionFault,
    CoefficientFault,
    run_all,
    series_side,
    verify,
    verify_bijection,
)
from opid.overpartitions import (
    count,
    enumerate_distinct,
    family_members,
    family_membership,
    parse,
)
from opid.series import Monomial, pochhammer, qgauss_check

from example_tables import PHI_ROWS, PSI_ROWS

KNOWN_NINE = [
    "4", "4~", "3+1", "3~+1", "3+1~", "3~+1~", "2~+2", "2+1~+1", "2~+1~+1",
]


def announce(number: int, detail: str) -> None:
    print(f"criterion {number}: PASS - {detail}")


class Stopwatch:
    def __init__(self, budget_s: float):
        self.budget_s = budget_s
        self.started = time.perf_counter()

    def check(self) -> float:
        elapsed = time.perf_counter() - self.started
        assert elapsed < self.budget_s, f"{elapsed:.1f}s exceeded {self.budget_s}s"
        return elapsed


def test_criterion_1_enumeration_ground_truth():
    watch = Stopwatch(1.0)
    assert count("pbar_d", 4) == 9
    assert [str(op) for op in enumerate_distinct(4)] == KNOWN_NINE
    elapsed = watch.check()
    announce(1, f"the nine overpartitions of 4 reproduced verbatim ({elapsed:.3f}s)")


def test_criterion_2_difference_identities():
    watch = Stopwatch(5.0)
    assert count("A", 15) == 19
    assert count("A", 14) == 14
    assert count("p_ed", 14) == 5
    assert count("A", 15) - count("A", 14) == count("p_ed", 14)
    assert count("B", 17) == 18
    assert count("B", 16) == 15
    assert count("p_od_gt1", 16) == 3
    assert count("B", 17) - count("B", 16) == count("p_od_gt1", 16)
    elapsed = watch.check()
    announce(2, f"A(15)-A(14)=p_ed(14) and B(17)-B(16)=p_od_gt1(16) ({elapsed:.3f}s)")


def test_criterion_3_series_identities_three_way():
    watch = Stopwatch(60.0)
    tags = ("thm1a", "thm1b", "thm2a", "thm2b", "thm3a", "thm3b", "thm4a", "thm4b")
    for tag in tags:
        report = verify(tag, order=60, weight=22)
        assert report.passed, (tag, report.witness)
    # the halving steps divide exactly at order 60: twice the halved closed
    # form reproduces the unhalved difference of products
    both_colours = pochhammer(Monomial(-1, 0, 1), 1, None, 60) ** 2
    even_values = pochhammer(Monomial(-1, 0, 2), 2, None, 60)
    signed = pochhammer(Monomial(1, 0, 1), 1, None, 60) ** 2
    rhs3a = series_side("thm3a", "rhs", 60)
    rhs3b = series_side("thm3b", "rhs", 60)
    assert rhs3a + rhs3a == both_colours - even_values
    assert rhs3b + rhs3b == even_values - signed
    elapsed = watch.check()
    announce(3, f"thm1a-thm4b agree three ways to order 60 / weight 22 ({elapsed:.1f}s)")


def test_criterion_4_bivariate_refinements():
    order = 50
    for tag, counter in (("res1", "A_nm"), ("res3", "B_nm")):
        report = verify(tag, order=order, weight=22)
        assert report.passed, (tag, report.witness)
        lhs = series_side(tag, "lhs", order)
        for n in range(0, 23):
            for m in range(0, n + 1):
                assert lhs.coefficient(n, m) == count(counter, n, m)
    assert series_side("res1", "lhs", order).specialize_x(-1) == series_side(
        "thm1b", "lhs", order
    )
    assert series_side("res1", "rhs", order).specialize_x(-1) == series_side(
        "thm1b", "rhs", order
    )
    assert series_side("res3", "lhs", order).specialize_x(-1) == series_side(
        "thm2b", "lhs", order
    )
    assert series_side("res3", "rhs", order).specialize_x(-1) == series_side(
        "thm2b", "rhs", order
    )
    announce(4, "res1/res3 tables to order 50 match counts; x=-1 reproduces the signed forms")


def test_criterion_5_bijection_suites():
    watch = Stopwatch(120.0)
    for map_id in BIJECTION_IDS:
        report = verify_bijection(map_id, 25)
        assert report.passed, (map_id, report.witness)
    assert len(PHI_ROWS) == 19 and len(PSI_ROWS) == 18
    for source, image, case in PHI_ROWS:
        result = phi(parse(source))
        assert (str(result.image), result.case_label) == (image, case)
        back = phi_inv(result.image)
        assert str(back.image) == source and back.case_label == CASE_TWIN[case]
    for source, image, case in PSI_ROWS:
        result = psi(parse(source))
        assert (str(result.image), result.case_label) == (image, case)
        back = psi_inv(result.image)
        assert str(back.image) == source and back.case_label == CASE_TWIN[case]
    elapsed = watch.check()
    announce(5, f"17 bijection sweeps to weight 25 plus all 37 table rows ({elapsed:.1f}s)")


def test_criterion_6_parity_refinements():
    for tag in ("res5-1", "res5-2", "res6-1", "res6-2",
                "cor3a", "cor3b", "cor4a", "cor4b"):
        report = verify(tag, weight=22)
        assert report.passed, (tag, report.witness)
    c0 = [str(op) for op in enumerate_distinct(4)
          if (st := family_membership(op, "C")) and st.parity_class == 0]
    c1 = [str(op) for op in enumerate_distinct(4)
          if (st := family_membership(op, "C")) and st.parity_class == 1]
    assert c0 == ["4~", "2~+1~+1"] and count("C0", 4) == 2
    assert c1 == ["3~+1", "3~+1~"] and count("C1", 4) == 2
    assert [str(op) for op in family_members(2, "D")] == ["2~", "1~+1"]
    assert count("D", 2) == 2
    announce(6, "parity refinements and their corollaries hold to weight 22")


def test_criterion_7_qgauss_specializations():
    assert qgauss_check("tool1", 50) is None
    assert qgauss_check("tool2", 50) is None
    announce(7, "both q-Gauss specialisations pass at order 50")


def test_criterion_8_euler_style_equality():
    report = verify("prop-euler", order=60, weight=25)
    assert report.passed, report.witness
    announce(8, "pbar_d = pbar_no to weight 25 by enumeration and order 60 by series")


def test_criterion_9_fault_injection_sensitivity():
    for tag in IDENTITY_TAGS:
        fault = CoefficientFault(tag, 5)
        reports = run_all(order=12, weight=10, fault=fault)
        failed = [r for r in reports if not r.passed]
        assert [r.identity for r in failed] == [tag], (tag, failed)
        assert failed[0].witness is not None
    for map_id in BIJECTION_IDS:
        fault = BijectionFault(map_id, 8, 0)
        reports = run_all(order=12, weight=10, fault=fault)
        failed = [r for r in reports if not r.passed]
        assert [r.identity for r in failed] == [map_id], (map_id, failed)
        witness = failed[0].witness
        assert witness is not None and witness["weight"] == 8
    announce(9, "every injected fault produced exactly one FAIL with a witness")


def test_the_registries_are_complete():
    assert len(IDENTITY_TAGS) == 27
    assert len(BIJECTION_IDS) == 17
    assert set(BIJECTION_IDS) == set(MAPS)
