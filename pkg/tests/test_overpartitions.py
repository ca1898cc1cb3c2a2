"""Overpartition model, enumeration, classification, and counting tests."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opid.overpartitions import (
    Overpartition,
    Part,
    PartError,
    classify_structure,
    count,
    distinct_partitions,
    enumerate_distinct,
    family_members,
    family_membership,
    largest_singleton,
    parse,
    target_class,
)
from opid.series import Monomial, invert_factor, pochhammer

KNOWN_NINE = [
    "4",
    "4~",
    "3+1",
    "3~+1",
    "3+1~",
    "3~+1~",
    "2~+2",
    "2+1~+1",
    "2~+1~+1",
]


# -- parsing and formatting ----------------------------------------------------


def test_parse_canonicalises_any_order():
    op = parse("3+8~+1+3~")
    assert str(op) == "8~+3~+3+1"
    assert op.parts == (Part(8, True), Part(3, True), Part(3, False), Part(1, False))


def test_parse_round_trip_of_the_worked_example():
    text = "8~+3~+3+1"
    assert str(parse(text)) == text


def test_parse_empty_is_the_empty_overpartition():
    op = parse("")
    assert op.parts == ()
    assert str(op) == ""


def test_parse_rejects_duplicates():
    with pytest.raises(PartError):
        parse("3+3")
    with pytest.raises(PartError):
        parse("3~+3~")


def test_parse_rejects_garbage():
    for bad in ("0", "-3", "a", "3++1", "3~~"):
        with pytest.raises(PartError):
            parse(bad)


def test_overlined_sorts_before_plain_at_equal_value():
    assert str(Overpartition([(2, False), (2, True)])) == "2~+2"


def test_json_form():
    assert parse("2~+1").to_json_dict() == {"parts": [[2, True], [1, False]]}


# -- statistics -----------------------------------------------------------------


def test_stats_small():
    op = parse("2~+1")
    assert (op.weight, op.length) == (3, 2)
    assert op.smallest_overlined == 2
    assert op.greatest_overlined == 2


def test_stats_empty():
    op = parse("")
    assert (op.weight, op.length) == (0, 0)
    assert op.smallest_overlined == 0
    assert op.greatest_overlined == 0


def test_stats_of_the_splitting_example():
    op = parse("18+16+7~+6+5~+3+1~")
    assert op.weight == 56
    assert op.length == 7
    assert op.greatest_overlined == 7
    assert op.smallest_overlined == 1


# -- enumeration ------------------------------------------------------------------


def test_enumerate_weight_4_matches_the_known_nine():
    assert [str(op) for op in enumerate_distinct(4)] == KNOWN_NINE


def test_enumerate_weight_0():
    assert enumerate_distinct(0) == (Overpartition(),)


def test_enumerate_weight_2():
    assert [str(op) for op in enumerate_distinct(2)] == ["2", "2~", "1~+1"]


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_is_exact_and_distinct(n):
    ops = enumerate_distinct(n)
    assert len(set(ops)) == len(ops)
    for op in ops:
        assert op.weight == n
        assert len(set(op.parts)) == op.length


def test_enumeration_deterministic():
    assert enumerate_distinct(9) == enumerate_distinct(9)


# -- structure --------------------------------------------------------------------


def test_classify_the_reference_decomposition():
    lam = parse("12~+12+11~+11+9~+8~+8+7+6~+3~+3")
    d = classify_structure(lam)
    assert d.pairs_i == frozenset({12, 11, 8, 3})
    assert d.pairs_ii == frozenset({12, 7})
    assert d.singletons_i == frozenset({Part(9, True), Part(7, False), Part(6, True)})
    assert d.singletons_ii == frozenset(
        {
            Part(12, True),
            Part(11, False),
            Part(9, True),
            Part(8, True),
            Part(8, False),
            Part(3, True),
            Part(3, False),
        }
    )


def test_classify_empty():
    d = classify_structure(parse(""))
    assert d.pairs_i == frozenset()
    assert d.pairs_ii == frozenset()
    assert d.singletons_i == frozenset()
    assert d.singletons_ii == frozenset()


def test_classify_one_pair():
    d = classify_structure(parse("1~+1"))
    assert d.pairs_i == frozenset({1})
    assert d.singletons_i == frozenset()
    assert d.singletons_ii == frozenset({Part(1, True), Part(1, False)})


@pytest.mark.parametrize("n", range(0, 16))
def test_pairs_and_singletons_cover_every_part(n):
    for op in enumerate_distinct(n):
        d = classify_structure(op)
        assert 2 * len(d.pairs_i) + len(d.singletons_i) == op.length
        assert 2 * len(d.pairs_ii) + len(d.singletons_ii) == op.length


def test_largest_singleton_tie_breaks_to_overlined():
    d = classify_structure(parse("5~+5"))
    assert largest_singleton(d.singletons_ii) == Part(5, True)


# -- target classes ----------------------------------------------------------------


def test_target_class_o1_example():
    labels = target_class(parse("9~+9+8~+8+7~+6+5~+3+1~"))
    assert "o1" in labels


def test_target_class_d1_for_a_lone_pair():
    assert "d1" in target_class(parse("2~+2"))


def test_target_class_e3_with_tie_break():
    labels = target_class(parse("12+11~+8+7~+7+6~+5~+5+2+1~"))
    assert "e3" in labels
    assert "e4" not in labels


def test_target_class_d3_requires_the_plain_one():
    assert "d3" in target_class(parse("1"))
    assert "d3" not in target_class(parse("1~"))
    assert "d3" in target_class(parse("7+6~+1"))


@pytest.mark.parametrize("n", range(1, 20))
def test_odd_length_trichotomy(n):
    # every odd-length overpartition is in exactly one of o3 / o4 / d3
    for op in enumerate_distinct(n):
        if op.length % 2 == 1:
            labels = target_class(op)
            assert len(labels & {"o3", "o4", "d3"}) == 1


# -- families -----------------------------------------------------------------------


def test_family_a_member():
    stats = family_membership(parse("2~+1"), "A")
    assert stats is not None
    assert stats.sbar == 2
    assert stats.m == 1


def test_family_a_of_weight_3():
    assert [str(op) for op in family_members(3, "A")] == ["3~", "2~+1"]


def test_family_c_example():
    stats = family_membership(parse("18+16+7~+6+5~+3+1~"), "C")
    assert stats is not None
    assert stats.gbar == 7
    assert stats.t == 4
    assert stats.parity_class == 0


def test_family_d_example():
    stats = family_membership(parse("23+15+13+5~+5+2+1~"), "D")
    assert stats is not None
    assert stats.gbar == 5
    assert stats.t == 4
    assert stats.parity_class == 0


def test_family_d_allows_a_plain_copy_of_gbar():
    assert family_membership(parse("2~+2"), "D") is not None
    # while C forbids it
    assert family_membership(parse("2~+2"), "C") is None


def test_family_rejections():
    assert family_membership(parse("3+1"), "A") is None  # no overlined part
    assert family_membership(parse("1~+1"), "A") is None  # plain part too large
    assert family_membership(parse("3+1~"), "D") is None  # plain 3 in the gap


def test_family_unknown_name():
    with pytest.raises(ValueError):
        family_membership(parse("1~"), "E")


@pytest.mark.parametrize("n", range(1, 22))
def test_family_members_always_have_an_overlined_part(n):
    for family in ("A", "B"):
        for op in family_members(n, family):
            assert op.has_overlined


@pytest.mark.parametrize("n", range(1, 22))
def test_family_plain_part_parities(n):
    for op in family_members(n, "A"):
        assert all(p.value % 2 == 1 for p in op.parts if not p.overlined)
    for op in family_members(n, "B"):
        assert all(p.value % 2 == 0 for p in op.parts if not p.overlined)


# -- counting -----------------------------------------------------------------------


def test_counts_from_the_worked_examples():
    assert count("A", 15) == 19
    assert count("A", 14) == 14
    assert count("p_ed", 14) == 5
    assert count("A", 15) - count("A", 14) == count("p_ed", 14)
    assert count("B", 17) == 18
    assert count("B", 16) == 15
    assert count("p_od_gt1", 16) == 3
    assert count("pbar_d", 4) == 9
    assert count("A", 1) == 1


def test_c_parity_members_at_weight_4():
    c0 = [str(op) for op in enumerate_distinct(4)
          if (st := family_membership(op, "C")) and st.parity_class == 0]
    c1 = [str(op) for op in enumerate_distinct(4)
          if (st := family_membership(op, "C")) and st.parity_class == 1]
    assert c0 == ["4~", "2~+1~+1"]
    assert c1 == ["3~+1", "3~+1~"]
    assert count("C0", 4) == 2
    assert count("C1", 4) == 2


def test_d_members_at_weight_2():
    members = [str(op) for op in family_members(2, "D")]
    assert members == ["2~", "1~+1"]
    assert count("D", 2) == 2


def test_counter_validation():
    with pytest.raises(ValueError):
        count("nope", 3)
    with pytest.raises(ValueError):
        count("A", 3, 1)  # refinement on a plain counter
    with pytest.raises(ValueError):
        count("A_nm", 3)  # missing refinement
    with pytest.raises(ValueError):
        count("A", -1)


@pytest.mark.parametrize("n", range(0, 24))
def test_family_counter_consistency(n):
    for family in ("A", "B"):
        total = count(family, n)
        assert count(f"{family}0", n) + count(f"{family}1", n) == total
        assert sum(count(f"{family}_nm", n, m) for m in range(n + 1)) == total
        signed = sum(
            (-1) ** m * count(f"{family}_nm", n, m) for m in range(n + 1)
        )
        assert count(f"{family}prime", n) == signed
    assert count("C0", n) + count("C1", n) == count("C", n)
    assert count("D0", n) + count("D1", n) == count("D", n)


@pytest.mark.parametrize("n", range(0, 31))
def test_distinct_overpartition_count_matches_its_product(n):
    series = pochhammer(Monomial(-1, 0, 1), 1, None, 30) ** 2
    assert count("pbar_d", n) == series.coefficient(n, 0)


@pytest.mark.parametrize("n", range(0, 31))
def test_pbar_no_matches_its_product_and_equals_pbar_d(n):
    order = 30
    series = pochhammer(Monomial(-1, 0, 1), 1, None, order)
    for exponent in range(1, order + 1, 2):
        series = series * invert_factor(Monomial(1, 0, exponent), order)
    assert count("pbar_no", n) == series.coefficient(n, 0)
    assert count("pbar_no", n) == count("pbar_d", n)


@pytest.mark.parametrize("n", range(0, 31))
def test_family_a_count_matches_its_product(n):
    series = (
        invert_factor(Monomial(1, 0, 1), 30)
        * pochhammer(Monomial(-1, 0, 2), 2, None, 30)
    ).times_monomial(Monomial(1, 0, 1))
    assert count("A", n) == series.coefficient(n, 0)


@pytest.mark.parametrize("n", range(0, 31))
def test_pair_class_cardinalities(n):
    d1 = sum(1 for op in enumerate_distinct(n) if "d1" in target_class(op))
    d2 = sum(1 for op in enumerate_distinct(n) if "d2" in target_class(op))
    d3 = sum(1 for op in enumerate_distinct(n) if "d3" in target_class(op))
    assert d1 == count("p_ed", n)
    assert d2 == count("p_od_gt1", n)
    assert d3 == (count("p_od_gt1", n - 1) if n >= 1 else 0)


def test_distinct_partitions_enumerator():
    assert distinct_partitions(6, 0, 2) == ((6,), (4, 2))
    assert distinct_partitions(9, 1, 3) == ((9,),)
    assert distinct_partitions(8, 1, 3) == ((5, 3),)
    assert distinct_partitions(12, 1, 3) == ((9, 3), (7, 5))
    assert distinct_partitions(0) == ((),)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=18))
def test_listing_round_trips_through_text(n):
    for op in enumerate_distinct(n):
        assert parse(str(op)) == op
