"""Overpartitions with distinct parts: model, enumeration, classification.

An overpartition is a partition in which the first occurrence of each part
size may be overlined.  "Distinct parts" here means each value appears at
most once overlined and at most once non-overlined, so an overlined and a
plain copy of the same value may coexist.

Text notation: parts joined by ``+``, a trailing ``~`` marking an overlined
part, e.g. ``8~+3~+3+1``.  Canonical order sorts by value descending with the
overlined copy before the plain copy at equal value.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class Part(NamedTuple):
    value: int
    overlined: bool

    def token(self) -> str:
        return f"{self.value}~" if self.overlined else str(self.value)


class PartError(ValueError):
    """Malformed part text or a violated distinctness constraint."""


class Overpartition:
    """An immutable overpartition with distinct parts in canonical order."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[tuple[int, bool]] = ()):
        norm = []
        for value, overlined in parts:
            if value < 1:
                raise PartError(f"part values must be positive, got {value}")
            norm.append(Part(int(value), bool(overlined)))
        norm.sort(key=lambda p: (-p.value, not p.overlined))
        for a, b in zip(norm, norm[1:]):
            if a == b:
                kind = "overlined" if a.overlined else "non-overlined"
                raise PartError(f"duplicate {kind} part {a.value}")
        object.__setattr__(self, "parts", tuple(norm))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Overpartition is immutable")

    # -- basic statistics ----------------------------------------------

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def has_overlined(self) -> bool:
        return any(p.overlined for p in self.parts)

    @property
    def smallest_overlined(self) -> int:
        """Value of the smallest overlined part, 0 when none exists."""
        values = [p.value for p in self.parts if p.overlined]
        return min(values) if values else 0

    @property
    def greatest_overlined(self) -> int:
        """Value of the greatest overlined part, 0 when none exists."""
        values = [p.value for p in self.parts if p.overlined]
        return max(values) if values else 0

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Overpartition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "+".join(p.token() for p in self.parts)

    def __repr__(self) -> str:
        return f"Overpartition({str(self)!r})"

    def to_json_dict(self) -> dict:
        return {"parts": [[p.value, p.overlined] for p in self.parts]}


def parse(text: str) -> Overpartition:
    """Parse the ``~``/``+`` notation; tokens may arrive in any order."""
    text = text.strip()
    if not text:
        return Overpartition()
    parts = []
    for token in text.split("+"):
        token = token.strip()
        overlined = token.endswith("~")
        if overlined:
            token = token[:-1]
        if not token.isdigit():
            raise PartError(f"malformed part token {token!r}")
        parts.append((int(token), overlined))
    return Overpartition(parts)


# -- enumeration ------------------------------------------------------------


def listing_key(op: Overpartition):
    """Sort key fixing the enumeration order.

    Groups share the underlying value multiset, ordered largest-part-first;
    within a group the overline pattern is read from the smallest part up,
    a plain part sorting before an overlined one.
    """
    return (
        tuple(-p.value for p in op.parts),
        tuple(int(p.overlined) for p in reversed(op.parts)),
    )


def _distinct_sequences(remaining: int, max_value: int) -> Iterator[list[Part]]:
    if remaining == 0:
        yield []
        return
    for v in range(min(max_value, remaining), 0, -1):
        for head in (
            [Part(v, True)],
            [Part(v, False)],
            [Part(v, True), Part(v, False)],
        ):
            used = sum(p.value for p in head)
            if used > remaining:
                continue
            for tail in _distinct_sequences(remaining - used, v - 1):
                yield head + tail


@functools.lru_cache(maxsize=None)
def enumerate_distinct(n: int) -> tuple[Overpartition, ...]:
    """All distinct-part overpartitions of weight n, each exactly once, in
    the deterministic listing order."""
    if n < 0:
        raise ValueError(f"weight must be non-negative, got {n}")
    ops = [Overpartition(seq) for seq in _distinct_sequences(n, n)]
    ops.sort(key=listing_key)
    return tuple(ops)


# -- pair/singleton structure ------------------------------------------------


@dataclass(frozen=True)
class StructureDecomposition:
    """Type-I and type-II pairings of the parts.

    A type-I pair is an overlined and a plain part of the same value v; a
    type-II pair is a plain part v together with the overlined part v-1.
    ``pairs_i`` holds the shared values v; ``pairs_ii`` holds the plain
    member's value v of each (v, v-1) pair.  Parts not covered by the
    respective pairing are the singletons of that type.
    """

    pairs_i: frozenset[int]
    pairs_ii: frozenset[int]
    singletons_i: frozenset[Part]
    singletons_ii: frozenset[Part]


@functools.lru_cache(maxsize=None)
def classify_structure(op: Overpartition) -> StructureDecomposition:
    overlined = {p.value for p in op.parts if p.overlined}
    plain = {p.value for p in op.parts if not p.overlined}
    pairs_i = overlined & plain
    pairs_ii = {v for v in plain if v - 1 in overlined}
    singles_i = frozenset(p for p in op.parts if p.value not in pairs_i)
    singles_ii = frozenset(
        p
        for p in op.parts
        if (p.overlined and p.value + 1 not in plain)
        or (not p.overlined and p.value - 1 not in overlined)
    )
    return StructureDecomposition(
        frozenset(pairs_i), frozenset(pairs_ii), singles_i, singles_ii
    )


def largest_singleton(singletons: frozenset[Part]) -> Optional[Part]:
    """The largest singleton under the value order, an overlined part
    outranking a plain one of equal value.  None when there are none."""
    if not singletons:
        return None
    return max(singletons, key=lambda p: (p.value, p.overlined))


TARGET_LABELS = ("o1", "o2", "e1", "e2", "e3", "e4", "o3", "o4", "d1", "d2", "d3")


@functools.lru_cache(maxsize=None)
def target_class(op: Overpartition) -> frozenset[str]:
    """All class labels the overpartition belongs to.

    o1/o2: odd length, the largest type-I singleton overlined / plain.
    e1/e2: even length with a type-I singleton, largest overlined / plain.
    e3/e4, o3/o4: the same for type-II singletons, except that o4 requires
    the largest type-II singleton to be plain and greater than 1.
    d1/d2: no singleton of type I / type II at all.
    d3: the only type-II singleton is the plain part 1.
    """
    d = classify_structure(op)
    labels = set()
    top_i = largest_singleton(d.singletons_i)
    top_ii = largest_singleton(d.singletons_ii)
    even = op.length % 2 == 0
    if top_i is None:
        labels.add("d1")
    elif even:
        labels.add("e1" if top_i.overlined else "e2")
    else:
        labels.add("o1" if top_i.overlined else "o2")
    if top_ii is None:
        labels.add("d2")
    elif even:
        labels.add("e3" if top_ii.overlined else "e4")
    elif top_ii.overlined:
        labels.add("o3")
    elif top_ii.value > 1:
        labels.add("o4")
    if d.singletons_ii == frozenset({Part(1, False)}):
        labels.add("d3")
    return frozenset(labels)


# -- the four families --------------------------------------------------------


@dataclass(frozen=True)
class FamilyStats:
    """Statistics attached to a family member.

    For A and B: ``sbar`` is the smallest overlined part and ``m`` the number
    of parts other than it.  For C and D: ``gbar`` is the greatest overlined
    part and ``t`` counts the parts below it (strictly below for C; for D the
    count includes every part of value <= gbar, the overlined gbar itself
    among them).  ``parity_class`` is 0 when the splitting statistic (the
    length for A/B, t for C/D) is even.
    """

    family: str
    sbar: Optional[int] = None
    gbar: Optional[int] = None
    m: Optional[int] = None
    t: Optional[int] = None
    parity_class: int = 0


FAMILIES = ("A", "B", "C", "D")


@functools.lru_cache(maxsize=None)
def family_membership(op: Overpartition, family: str) -> Optional[FamilyStats]:
    """Decide membership in one of the families A, B, C, D.

    A: has an overlined part; with s the smallest overlined part, every other
       overlined part is even and >= 2s+2, every plain part odd and <= 2s-3.
    B: same shape with the parities swapped: other overlined parts odd and
       >= 2s+3, plain parts even and <= 2s-2.
    C: has an overlined part; with g the greatest overlined part, no plain
       part equals g, and every plain part is either < g or even and >= 2g+2.
    D: with g the greatest overlined part, a plain g is allowed, and every
       plain part is either <= g or odd and >= 2g+3.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not op.has_overlined:
        return None
    if family in ("A", "B"):
        s = op.smallest_overlined
        for value, overlined in op.parts:
            if overlined:
                if value == s:
                    continue
                if family == "A" and (value % 2 or value < 2 * s + 2):
                    return None
                if family == "B" and (value % 2 == 0 or value < 2 * s + 3):
                    return None
            else:
                if family == "A" and (value % 2 == 0 or value > 2 * s - 3):
                    return None
                if family == "B" and (value % 2 or value > 2 * s - 2):
                    return None
        return FamilyStats(
            family, sbar=s, m=op.length - 1, parity_class=op.length % 2
        )
    g = op.greatest_overlined
    for value, overlined in op.parts:
        if overlined:
            continue
        if family == "C":
            if value == g:
                return None
            if value > g and (value % 2 or value < 2 * g + 2):
                return None
        else:
            if value > g and (value % 2 == 0 or value < 2 * g + 3):
                return None
    if family == "C":
        t = sum(1 for p in op.parts if p.value < g)
    else:
        t = sum(1 for p in op.parts if p.value <= g)
    return FamilyStats(family, gbar=g, t=t, parity_class=t % 2)


@functools.lru_cache(maxsize=None)
def _family_stats(n: int, family: str) -> tuple[FamilyStats, ...]:
    found = []
    for op in enumerate_distinct(n):
        stats = family_membership(op, family)
        if stats is not None:
            found.append(stats)
    return tuple(found)


def family_members(n: int, family: str) -> tuple[Overpartition, ...]:
    """The family's members of weight n, in listing order."""
    return tuple(
        op for op in enumerate_distinct(n) if family_membership(op, family)
    )


# -- plain partition enumerators ----------------------------------------------


def _partition_tuples(
    remaining: int, max_part: int, parity: Optional[int], min_part: int
) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for v in range(min(max_part, remaining), min_part - 1, -1):
        if parity is not None and v % 2 != parity:
            continue
        for tail in _partition_tuples(remaining - v, v - 1, parity, min_part):
            yield (v,) + tail


@functools.lru_cache(maxsize=None)
def distinct_partitions(
    n: int, parity: Optional[int] = None, min_part: int = 1
) -> tuple[tuple[int, ...], ...]:
    """Partitions of n into distinct parts, optionally restricted to one
    parity and to parts >= min_part.  Parts are listed descending."""
    if n < 0:
        raise ValueError(f"weight must be non-negative, got {n}")
    return tuple(_partition_tuples(n, n, parity, min_part))


def _odd_multisets(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    v = max_part if max_part % 2 else max_part - 1
    while v >= 1:
        if v <= remaining:
            for tail in _odd_multisets(remaining - v, v):
                yield (v,) + tail
        v -= 2
    return


@functools.lru_cache(maxsize=None)
def _count_odd_part_partitions(n: int) -> int:
    return sum(1 for _ in _odd_multisets(n, n))


@functools.lru_cache(maxsize=None)
def _count_pbar_no(n: int) -> int:
    # Overpartitions whose non-overlined parts are all odd: an overlined part
    # set (distinct, any values) plus a multiset of odd plain parts.
    total = 0
    for s in range(n + 1):
        overlined_choices = len(distinct_partitions(s))
        if overlined_choices:
            total += overlined_choices * _count_odd_part_partitions(n - s)
    return total


# -- counting -----------------------------------------------------------------

_FAMILY_COUNTERS = {
    "A": ("A", None),
    "A0": ("A", 0),
    "A1": ("A", 1),
    "B": ("B", None),
    "B0": ("B", 0),
    "B1": ("B", 1),
    "C": ("C", None),
    "C0": ("C", 0),
    "C1": ("C", 1),
    "D": ("D", None),
    "D0": ("D", 0),
    "D1": ("D", 1),
}

_NM_COUNTERS = {"A_nm", "B_nm", "p_ed_nm", "p_od_gt1_nm"}

COUNTERS = tuple(
    sorted(
        set(_FAMILY_COUNTERS)
        | _NM_COUNTERS
        | {
            "Aprime",
            "Bprime",
            "Cprime",
            "Dprime",
            "p_ed",
            "p_ed_prime",
            "p_od",
            "p_od_gt1",
            "p_od_gt1_prime",
            "pbar_no",
            "pbar_d",
            "pbar_d_even",
            "pbar_d_odd",
            "pbar_d_prime",
        }
    )
)


def _partition_counter(n: int, parity: int, min_part: int, mode: str, m=None) -> int:
    parts_list = distinct_partitions(n, parity, min_part)
    if mode == "plain":
        return len(parts_list)
    if mode == "nm":
        return sum(1 for p in parts_list if len(p) == m)
    # signed: even number of parts counts +1, odd counts -1
    return sum(1 if len(p) % 2 == 0 else -1 for p in parts_list)


def count(counter: str, n: int, m: Optional[int] = None) -> int:
    """Evaluate one of the named counting functions at weight n.

    ``m`` is the part-count refinement and is accepted exactly for the
    ``*_nm`` counters.  All counts are computed by exhaustive enumeration.
    """
    if counter not in COUNTERS:
        raise ValueError(f"unknown counter {counter!r}")
    if counter in _NM_COUNTERS:
        if m is None:
            raise ValueError(f"counter {counter!r} needs the refinement m")
    elif m is not None:
        raise ValueError(f"counter {counter!r} does not take a refinement m")
    if n < 0:
        raise ValueError(f"weight must be non-negative, got {n}")
    if m is not None and m < 0:
        raise ValueError(f"refinement must be non-negative, got {m}")

    if counter in _FAMILY_COUNTERS:
        family, parity = _FAMILY_COUNTERS[counter]
        stats = _family_stats(n, family)
        if parity is None:
            return len(stats)
        return sum(1 for st in stats if st.parity_class == parity)
    if counter in ("Aprime", "Bprime"):
        stats = _family_stats(n, counter[0])
        return sum(1 if st.parity_class == 1 else -1 for st in stats)
    if counter == "Cprime":
        stats = _family_stats(n, "C")
        return sum(1 if st.parity_class == 0 else -1 for st in stats)
    if counter == "Dprime":
        stats = _family_stats(n, "D")
        return sum(1 if st.parity_class == 1 else -1 for st in stats)
    if counter in ("A_nm", "B_nm"):
        stats = _family_stats(n, counter[0])
        return sum(1 for st in stats if st.m == m)

    if counter == "p_ed":
        return _partition_counter(n, 0, 2, "plain")
    if counter == "p_ed_nm":
        return _partition_counter(n, 0, 2, "nm", m)
    if counter == "p_ed_prime":
        return _partition_counter(n, 0, 2, "signed")
    if counter == "p_od":
        return _partition_counter(n, 1, 1, "plain")
    if counter == "p_od_gt1":
        return _partition_counter(n, 1, 3, "plain")
    if counter == "p_od_gt1_nm":
        return _partition_counter(n, 1, 3, "nm", m)
    if counter == "p_od_gt1_prime":
        return _partition_counter(n, 1, 3, "signed")

    if counter == "pbar_no":
        return _count_pbar_no(n)
    ops = enumerate_distinct(n)
    if counter == "pbar_d":
        return len(ops)
    if counter == "pbar_d_even":
        return sum(1 for op in ops if op.length % 2 == 0)
    if counter == "pbar_d_odd":
        return sum(1 for op in ops if op.length % 2 == 1)
    # pbar_d_prime
    return sum(1 if op.length % 2 == 0 else -1 for op in ops)
