"""Executable forward and inverse forms of the weight-shifting and
structure-preserving bijections between overpartition families.

phi / psi lower the weight by one on families A and B, landing either back in
the family or among distinct-even (resp. distinct-odd-greater-than-1)
partitions; both follow a three-case analysis driven by the smallest
overlined part.  f0/f1 split large plain parts of family-C members into
type-I pairs; h0/h1 do the same with type-II pairs on family D, the second
case also trading the greatest overlined part for a plain part one larger.
sigma toggles the colour of every type-I singleton, and the pair transforms
merge or split whole pair decompositions.

Every map validates its precondition eagerly and raises MappingError on
non-members, so the bijectivity sweeps can tell wrong inputs from wrong
outputs.  Outputs are re-canonicalised Overpartition values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .overpartitions import (
    FamilyStats,
    Overpartition,
    Part,
    classify_structure,
    family_membership,
    largest_singleton,
    target_class,
)


class MappingError(ValueError):
    """The operand is not in the map's domain (or claimed codomain)."""


@dataclass(frozen=True)
class MappingResult:
    source: Overpartition
    image: Overpartition
    case_label: str
    source_class: str
    target_class: str

    def to_json_dict(self) -> dict:
        return {
            "input": str(self.source),
            "image": str(self.image),
            "caseLabel": self.case_label,
            "sourceClass": self.source_class,
            "targetClass": self.target_class,
            "weightIn": self.source.weight,
            "weightOut": self.image.weight,
        }


def _member(op: Overpartition, family: str) -> FamilyStats:
    stats = family_membership(op, family)
    if stats is None:
        raise MappingError(f"{op!s} is not a member of family {family}")
    return stats


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise MappingError(message)


# -- phi: family A, weight n -> n-1 -----------------------------------------


def phi(pi: Overpartition) -> MappingResult:
    """Weight-lowering bijection on family A.

    CASE I removes a smallest overlined part 1 and strips the overlines;
    CASE II just decrements the smallest overlined part; CASE III absorbs the
    maximal run of plain odd parts 2s-3, 2s-5, ... into overlined even parts
    one larger while the smallest overlined part drops past them, falling
    back to the stripped form when it reaches zero (III-2).
    """
    stats = _member(pi, "A")
    s = stats.sbar
    rest = [p for p in pi.parts if p != Part(s, True)]
    if s == 1:
        image = Overpartition((p.value, False) for p in rest)
        return MappingResult(pi, image, "I", "A", "P_ed")
    run = []
    v = 2 * s - 3
    while v >= 1 and Part(v, False) in pi.parts:
        run.append(v)
        v -= 2
    if not run:
        image = Overpartition([(p.value, p.overlined) for p in rest] + [(s - 1, True)])
        return MappingResult(pi, image, "II", "A", "A")
    run_set = set(run)
    keep = [p for p in rest if p.overlined or p.value not in run_set]
    converted = [(w + 1, True) for w in run]
    new_s = s - len(run) - 1
    if new_s >= 1:
        image = Overpartition(
            [(p.value, p.overlined) for p in keep] + converted + [(new_s, True)]
        )
        return MappingResult(pi, image, "III-1", "A", "A")
    image = Overpartition(
        [(p.value, False) for p in keep] + [(v, False) for v, _ in converted]
    )
    return MappingResult(pi, image, "III-2", "A", "P_ed")


def _even_plain_values(lam: Overpartition, what: str) -> list[int]:
    _require(
        not lam.has_overlined and all(p.value % 2 == 0 for p in lam.parts),
        f"{lam!s} is not a partition into distinct even parts ({what})",
    )
    return [p.value for p in lam.parts]


def phi_inv(lam: Overpartition) -> MappingResult:
    """Inverse of phi, dispatching on the codomain class markers."""
    if not lam.has_overlined:
        values = _even_plain_values(lam, "phi inverse")
        if not values or min(values) >= 4:
            image = Overpartition([(v, True) for v in values] + [(1, True)])
            return MappingResult(lam, image, "I'", "P_ed", "A")
        # the smallest even part is 2: reverse of CASE III-2
        t = 0
        while 2 * (t + 1) in values:
            t += 1
        run_set = {2 * j for j in range(1, t + 1)}
        parts = [(v, True) for v in values if v not in run_set]
        parts += [(2 * j - 1, False) for j in range(1, t + 1)]
        parts.append((t + 1, True))
        return MappingResult(lam, Overpartition(parts), "III'-2", "P_ed", "A")
    stats = _member(lam, "A")
    s = stats.sbar
    rest = [(p.value, p.overlined) for p in lam.parts if p != Part(s, True)]
    if Part(2 * s + 2, True) not in lam.parts:
        image = Overpartition(rest + [(s + 1, True)])
        return MappingResult(lam, image, "II'", "A", "A")
    t = 0
    while Part(2 * s + 2 * (t + 1), True) in lam.parts:
        t += 1
    run_set = {2 * s + 2 * j for j in range(1, t + 1)}
    parts = [(v, ov) for v, ov in rest if not (ov and v in run_set)]
    parts += [(2 * s + 2 * j - 1, False) for j in range(1, t + 1)]
    parts.append((s + t + 1, True))
    return MappingResult(lam, Overpartition(parts), "III'-1", "A", "A")


# -- psi: family B, weight n -> n-1 ------------------------------------------


def psi(pi: Overpartition) -> MappingResult:
    """Weight-lowering bijection on family B, the even/odd mirror of phi."""
    stats = _member(pi, "B")
    s = stats.sbar
    rest = [p for p in pi.parts if p != Part(s, True)]
    if s == 1:
        image = Overpartition((p.value, False) for p in rest)
        return MappingResult(pi, image, "I", "B", "P_od>1")
    run = []
    v = 2 * s - 2
    while v >= 2 and Part(v, False) in pi.parts:
        run.append(v)
        v -= 2
    if not run:
        image = Overpartition([(p.value, p.overlined) for p in rest] + [(s - 1, True)])
        return MappingResult(pi, image, "II", "B", "B")
    run_set = set(run)
    keep = [p for p in rest if p.overlined or p.value not in run_set]
    converted = [(w + 1, True) for w in run]
    new_s = s - len(run) - 1
    if new_s >= 1:
        image = Overpartition(
            [(p.value, p.overlined) for p in keep] + converted + [(new_s, True)]
        )
        return MappingResult(pi, image, "III-1", "B", "B")
    image = Overpartition(
        [(p.value, False) for p in keep] + [(v, False) for v, _ in converted]
    )
    return MappingResult(pi, image, "III-2", "B", "P_od>1")


def psi_inv(lam: Overpartition) -> MappingResult:
    """Inverse of psi."""
    if not lam.has_overlined:
        _require(
            all(p.value % 2 == 1 and p.value > 1 for p in lam.parts),
            f"{lam!s} is not a partition into distinct odd parts > 1",
        )
        values = [p.value for p in lam.parts]
        if not values or min(values) >= 5:
            image = Overpartition([(v, True) for v in values] + [(1, True)])
            return MappingResult(lam, image, "I'", "P_od>1", "B")
        # the smallest part is 3: reverse of CASE III-2
        t = 0
        while 2 * (t + 1) + 1 in values:
            t += 1
        run_set = {2 * j + 1 for j in range(1, t + 1)}
        parts = [(v, True) for v in values if v not in run_set]
        parts += [(2 * j, False) for j in range(1, t + 1)]
        parts.append((t + 1, True))
        return MappingResult(lam, Overpartition(parts), "III'-2", "P_od>1", "B")
    stats = _member(lam, "B")
    s = stats.sbar
    rest = [(p.value, p.overlined) for p in lam.parts if p != Part(s, True)]
    if Part(2 * s + 3, True) not in lam.parts:
        image = Overpartition(rest + [(s + 1, True)])
        return MappingResult(lam, image, "II'", "B", "B")
    t = 0
    while Part(2 * s + 2 * (t + 1) + 1, True) in lam.parts:
        t += 1
    run_set = {2 * s + 2 * j + 1 for j in range(1, t + 1)}
    parts = [(v, ov) for v, ov in rest if not (ov and v in run_set)]
    parts += [(2 * s + 2 * j, False) for j in range(1, t + 1)]
    parts.append((s + t + 1, True))
    return MappingResult(lam, Overpartition(parts), "III'-1", "B", "B")


# -- f0 / f1: family C -> classes o1 / e1 -------------------------------------


def _f_forward(pi: Overpartition, parity: int) -> MappingResult:
    stats = _member(pi, "C")
    _require(
        stats.parity_class == parity,
        f"{pi!s} is in C{stats.parity_class}, not C{parity}",
    )
    g = stats.gbar
    parts: list[tuple[int, bool]] = []
    for p in pi.parts:
        if not p.overlined and p.value >= 2 * g + 2:
            half = p.value // 2
            parts += [(half, True), (half, False)]
        else:
            parts.append((p.value, p.overlined))
    image = Overpartition(parts)
    label = "o1" if parity == 0 else "e1"
    return MappingResult(pi, image, "split", f"C{parity}", label)


def _f_inverse(lam: Overpartition, parity: int) -> MappingResult:
    label = "o1" if parity == 0 else "e1"
    _require(label in target_class(lam), f"{lam!s} is not in class {label}")
    decomp = classify_structure(lam)
    top = largest_singleton(decomp.singletons_i)
    g = top.value
    parts: list[tuple[int, bool]] = []
    for p in lam.parts:
        if p.value in decomp.pairs_i and p.value > g:
            if p.overlined:
                parts.append((2 * p.value, False))
        else:
            parts.append((p.value, p.overlined))
    image = Overpartition(parts)
    return MappingResult(lam, image, "merge", label, f"C{parity}")


def f0(pi: Overpartition) -> MappingResult:
    """Split every plain part >= 2g+2 of a C0 member into a type-I pair."""
    return _f_forward(pi, 0)


def f1(pi: Overpartition) -> MappingResult:
    """The same splitting on C1 members, landing in class e1."""
    return _f_forward(pi, 1)


def f0_inv(lam: Overpartition) -> MappingResult:
    """Merge the type-I pairs above the largest type-I singleton."""
    return _f_inverse(lam, 0)


def f1_inv(lam: Overpartition) -> MappingResult:
    return _f_inverse(lam, 1)


# -- sigma: the colour-toggle involution --------------------------------------


def sigma(lam: Overpartition) -> MappingResult:
    """Flip the colour of every type-I singleton; pairs stay untouched.

    An involution preserving weight and length, exchanging the classes
    o1 <-> o2 and e1 <-> e2.
    """
    decomp = classify_structure(lam)
    parts = [
        (p.value, not p.overlined if p in decomp.singletons_i else p.overlined)
        for p in lam.parts
    ]
    return MappingResult(lam, Overpartition(parts), "toggle", "pbar_d", "pbar_d")


# -- pair merge / split --------------------------------------------------------


def pair_transform(direction: str, pair_type: str, op: Overpartition) -> MappingResult:
    """Merge a fully paired overpartition into a plain partition, or split
    one back: a type-I pair at v merges to the even part 2v, a type-II pair
    (v, v-1 overlined) to the odd part 2v-1."""
    if direction not in ("merge", "split"):
        raise MappingError(f"unknown direction {direction!r}")
    if pair_type not in ("I", "II"):
        raise MappingError(f"unknown pair type {pair_type!r}")
    if direction == "merge":
        decomp = classify_structure(op)
        if pair_type == "I":
            _require(
                not decomp.singletons_i,
                f"{op!s} has type-I singletons and cannot be merged",
            )
            image = Overpartition((2 * v, False) for v in decomp.pairs_i)
            return MappingResult(op, image, "merge", "d1", "P_ed")
        _require(
            not decomp.singletons_ii,
            f"{op!s} has type-II singletons and cannot be merged",
        )
        image = Overpartition((2 * v - 1, False) for v in decomp.pairs_ii)
        return MappingResult(op, image, "merge", "d2", "P_od>1")
    if pair_type == "I":
        values = _even_plain_values(op, "type-I split")
        parts: list[tuple[int, bool]] = []
        for v in values:
            parts += [(v // 2, True), (v // 2, False)]
        return MappingResult(op, Overpartition(parts), "split", "P_ed", "d1")
    _require(
        not op.has_overlined and all(p.value % 2 == 1 and p.value > 1 for p in op.parts),
        f"{op!s} is not a partition into distinct odd parts > 1",
    )
    parts = []
    for p in op.parts:
        half = (p.value + 1) // 2
        parts += [(half, False), (half - 1, True)]
    return MappingResult(op, Overpartition(parts), "split", "P_od>1", "d2")


def merge1(op: Overpartition) -> MappingResult:
    return pair_transform("merge", "I", op)


def split1(op: Overpartition) -> MappingResult:
    return pair_transform("split", "I", op)


def merge2(op: Overpartition) -> MappingResult:
    return pair_transform("merge", "II", op)


def split2(op: Overpartition) -> MappingResult:
    return pair_transform("split", "II", op)


# -- h0 / h1: family D -> classes e3/e4 (o3/o4) --------------------------------

_H_TARGETS = {(0, "I"): "e3", (0, "II"): "e4", (1, "I"): "o3", (1, "II"): "o4"}


def _h_forward(pi: Overpartition, parity: int, case: str) -> MappingResult:
    if case not in ("I", "II"):
        raise MappingError(f"h takes case 'I' or 'II', got {case!r}")
    stats = _member(pi, "D")
    _require(
        stats.parity_class == parity,
        f"{pi!s} is in D{stats.parity_class}, not D{parity}",
    )
    g = stats.gbar
    parts: list[tuple[int, bool]] = []
    for p in pi.parts:
        if not p.overlined and p.value >= 2 * g + 3:
            a = (p.value - 1) // 2
            parts += [(a + 1, False), (a, True)]
        elif case == "II" and p == Part(g, True):
            parts.append((g + 1, False))
        else:
            parts.append((p.value, p.overlined))
    image = Overpartition(parts)
    return MappingResult(pi, image, case, f"D{parity}", _H_TARGETS[(parity, case)])


def _h_inverse(lam: Overpartition, parity: int) -> MappingResult:
    decomp = classify_structure(lam)
    top = largest_singleton(decomp.singletons_ii)
    _require(top is not None, f"{lam!s} has no type-II singleton")
    if top.overlined:
        label = _H_TARGETS[(parity, "I")]
        threshold = 2 * top.value + 3
        case = "I'"
    else:
        _require(
            top.value > 1,
            f"the largest type-II singleton of {lam!s} is the plain part 1",
        )
        label = _H_TARGETS[(parity, "II")]
        threshold = 2 * top.value + 1
        case = "II'"
    _require(label in target_class(lam), f"{lam!s} is not in class {label}")
    parts: list[tuple[int, bool]] = []
    for p in lam.parts:
        if (
            not p.overlined
            and p.value in decomp.pairs_ii
            and 2 * p.value - 1 >= threshold
        ):
            parts.append((2 * p.value - 1, False))
        elif (
            p.overlined
            and p.value + 1 in decomp.pairs_ii
            and 2 * (p.value + 1) - 1 >= threshold
        ):
            continue
        elif case == "II'" and p == top:
            parts.append((top.value - 1, True))
        else:
            parts.append((p.value, p.overlined))
    image = Overpartition(parts)
    return MappingResult(lam, image, case, label, f"D{parity}")


def h0(pi: Overpartition, case: str = "I") -> MappingResult:
    """Map a D0 member into class e3 (case I, weight kept) or e4 (case II,
    weight raised by one): plain odd parts >= 2g+3 split into type-II pairs,
    and in case II the greatest overlined part g becomes the plain part g+1.
    """
    return _h_forward(pi, 0, case)


def h1(pi: Overpartition, case: str = "I") -> MappingResult:
    """The D1 counterpart of h0, landing in o3 / o4."""
    return _h_forward(pi, 1, case)


def h0_inv(lam: Overpartition) -> MappingResult:
    """Inverse of h0, dispatching on the colour of the largest type-II
    singleton."""
    return _h_inverse(lam, 0)


def h1_inv(lam: Overpartition) -> MappingResult:
    return _h_inverse(lam, 1)


# -- registry ------------------------------------------------------------------

MAPS = {
    "phi": phi,
    "phi-inv": phi_inv,
    "psi": psi,
    "psi-inv": psi_inv,
    "f0": f0,
    "f0-inv": f0_inv,
    "f1": f1,
    "f1-inv": f1_inv,
    "sigma": sigma,
    "merge1": merge1,
    "split1": split1,
    "merge2": merge2,
    "split2": split2,
    "h0": h0,
    "h0-inv": h0_inv,
    "h1": h1,
    "h1-inv": h1_inv,
}

CASED_MAPS = ("h0", "h1")

# forward case label <-> the inverse branch that undoes it
CASE_TWIN = {
    "I": "I'",
    "I'": "I",
    "II": "II'",
    "II'": "II",
    "III-1": "III'-1",
    "III'-1": "III-1",
    "III-2": "III'-2",
    "III'-2": "III-2",
    "split": "merge",
    "merge": "split",
    "toggle": "toggle",
}
