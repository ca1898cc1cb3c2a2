"""Exact truncated power series in q and x over Python integers.

Everything here is exact: coefficients are arbitrary-precision ints, and a
series carries an explicit inclusive truncation order N in the q-degree.
Two series may only be combined when their orders agree; mixing orders is an
error rather than a silent precision loss.

The x variable is never truncated on its own.  Every x in the products built
by this package rides on a factor with q-degree >= 1, so x-degrees are
implicitly bounded by the q-order.

Division exists only in the restricted form ``invert_factor``, the geometric
inverse of a single (1 - monomial) factor.  That is all the identity checks
need, and it keeps every operation total within the truncation discipline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union

Key = tuple[int, int]  # (qdeg, xdeg)


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class OrderMismatchError(SeriesError):
    """Two series with different truncation orders were combined."""


class TruncationError(SeriesError):
    """A coefficient beyond the truncation order was requested."""


class OddCoefficientError(SeriesError):
    """halve() met a coefficient that is not divisible by 2."""

    def __init__(self, qdeg: int, xdeg: int, coefficient: int):
        self.qdeg = qdeg
        self.xdeg = xdeg
        self.coefficient = coefficient
        super().__init__(
            f"coefficient {coefficient} at (qdeg={qdeg}, xdeg={xdeg}) is odd"
        )


@dataclass(frozen=True)
class Monomial:
    """A signed monomial ``sign * x^xexp * q^qexp`` with sign +1 or -1.

    Monomials are the only admissible arguments of Pochhammer products and
    factor inversion.  ``qexp >= 1`` is required wherever an infinite product
    or an inversion must converge under truncation.
    """

    sign: int
    xexp: int = 0
    qexp: int = 0

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise SeriesError(f"monomial sign must be +1 or -1, got {self.sign}")
        if self.xexp < 0 or self.qexp < 0:
            raise SeriesError("monomial exponents must be non-negative")

    def q_shifted(self, qshift: int) -> "Monomial":
        """The monomial multiplied by q**qshift."""
        return Monomial(self.sign, self.xexp, self.qexp + qshift)


class TruncatedSeries:
    """An exact bivariate series in q and x, truncated at q-degree ``order``.

    The term table never stores zero coefficients; equality is term-table
    equality at equal order.  Instances are immutable; all operations return
    new series.
    """

    __slots__ = ("order", "_terms")

    def __init__(
        self,
        order: int,
        terms: Union[Mapping[Key, int], Iterable[tuple[Key, int]]] = (),
    ):
        if order < 0:
            raise SeriesError(f"order must be non-negative, got {order}")
        table: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (qdeg, xdeg), coeff in items:
            if qdeg < 0 or xdeg < 0:
                raise SeriesError(f"negative degree in term ({qdeg}, {xdeg})")
            if qdeg > order:
                raise SeriesError(
                    f"term q^{qdeg} exceeds the truncation order {order}"
                )
            if coeff:
                table[(qdeg, xdeg)] = table.get((qdeg, xdeg), 0) + coeff
        self._set("_terms", {k: c for k, c in table.items() if c})
        self._set("order", order)

    def _set(self, name: str, value) -> None:
        object.__setattr__(self, name, value)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, {(0, 0): 1})

    # -- term access -------------------------------------------------------

    def coefficient(self, qdeg: int, xdeg: int = 0) -> int:
        """The stored coefficient of q^qdeg x^xdeg, or 0.

        Asking beyond the truncation order is an error: past the horizon the
        coefficient is unknown, not zero.
        """
        if qdeg > self.order:
            raise TruncationError(
                f"q^{qdeg} is beyond the truncation order {self.order}"
            )
        if qdeg < 0 or xdeg < 0:
            return 0
        return self._terms.get((qdeg, xdeg), 0)

    def terms(self) -> Iterator[tuple[Key, int]]:
        """Nonzero terms sorted by (qdeg, xdeg)."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        table = dict(self._terms)
        for key, coeff in other._terms.items():
            table[key] = table.get(key, 0) + coeff
        return TruncatedSeries(self.order, table)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        order = self.order
        table: dict[Key, int] = {}
        for (q1, x1), c1 in self._terms.items():
            for (q2, x2), c2 in other._terms.items():
                qdeg = q1 + q2
                if qdeg > order:
                    continue
                key = (qdeg, x1 + x2)
                table[key] = table.get(key, 0) + c1 * c2
        return TruncatedSeries(order, table)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise SeriesError("negative powers are not defined for series")
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def times_monomial(self, m: Monomial) -> "TruncatedSeries":
        """The cheap product self * m, dropping terms beyond the order."""
        table: dict[Key, int] = {}
        for (qdeg, xdeg), coeff in self._terms.items():
            q = qdeg + m.qexp
            if q > self.order:
                continue
            table[(q, xdeg + m.xexp)] = m.sign * coeff
        return TruncatedSeries(self.order, table)

    # -- transforms --------------------------------------------------------

    def specialize_x(self, value: int) -> "TruncatedSeries":
        """Substitute x = +1 or x = -1, collapsing to a univariate series."""
        if value not in (1, -1):
            raise SeriesError(f"x may only be specialised to +1 or -1, got {value}")
        table: dict[Key, int] = {}
        for (qdeg, xdeg), coeff in self._terms.items():
            signed = coeff if (value == 1 or xdeg % 2 == 0) else -coeff
            key = (qdeg, 0)
            table[key] = table.get(key, 0) + signed
        return TruncatedSeries(self.order, table)

    def halve(self) -> "TruncatedSeries":
        """Exact coefficientwise division by 2.

        Raises OddCoefficientError naming the first (qdeg, xdeg) whose
        coefficient is not even.
        """
        for key in sorted(self._terms):
            if self._terms[key] % 2:
                raise OddCoefficientError(key[0], key[1], self._terms[key])
        return TruncatedSeries(self.order, {k: c // 2 for k, c in self._terms.items()})

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (qdeg, xdeg), coeff in self.terms():
            factors: list[str] = []
            if xdeg == 1:
                factors.append("x")
            elif xdeg > 1:
                factors.append(f"x^{xdeg}")
            if qdeg == 1:
                factors.append("q")
            elif qdeg > 1:
                factors.append(f"q^{qdeg}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<TruncatedSeries order={self.order}: {self}>"

    def to_json_dict(self) -> dict:
        """JSON form with coefficients as decimal strings."""
        return {
            "order": self.order,
            "terms": [[q, x, str(c)] for (q, x), c in self.terms()],
        }


def monomial_series(m: Monomial, order: int) -> TruncatedSeries:
    """The series consisting of the single monomial term, or zero if it lies
    beyond the truncation order."""
    if m.qexp > order:
        return TruncatedSeries.zero(order)
    return TruncatedSeries(order, {(m.qexp, m.xexp): m.sign})


def invert_factor(m: Monomial, order: int) -> TruncatedSeries:
    """The geometric inverse of (1 - m): sum of m**k for k >= 0.

    Requires ``m.qexp >= 1`` so that the expansion terminates under
    truncation; multiplying the result by (1 - m) gives 1 up to the order.
    """
    if m.qexp < 1:
        raise SeriesError("cannot invert a factor whose monomial has qexp = 0")
    table: dict[Key, int] = {(0, 0): 1}
    k = 1
    while k * m.qexp <= order:
        sign = 1 if (m.sign == 1 or k % 2 == 0) else -1
        table[(k * m.qexp, k * m.xexp)] = sign
        k += 1
    return TruncatedSeries(order, table)


def pochhammer(
    a: Monomial, step: int, count: Optional[int], order: int
) -> TruncatedSeries:
    """The product of (1 - a*q**(step*j)) for j = 0 .. count-1.

    ``count=None`` means the infinite product, which requires ``a.qexp >= 1``;
    factors whose q-degree exceeds the order are congruent to 1 and are
    skipped.
    """
    if step < 1:
        raise SeriesError(f"step must be positive, got {step}")
    if count is None and a.qexp < 1:
        raise SeriesError("infinite products need a monomial with qexp >= 1")
    if count is not None and count < 0:
        raise SeriesError(f"count must be non-negative, got {count}")
    result = TruncatedSeries.one(order)
    j = 0
    while count is None or j < count:
        factor_qexp = a.qexp + step * j
        if factor_qexp > order:
            break
        result = result - result.times_monomial(a.q_shifted(step * j))
        j += 1
    return result


def first_mismatch(
    s: TruncatedSeries, t: TruncatedSeries
) -> Optional[tuple[int, int, int, int]]:
    """The first (qdeg, xdeg, lhs, rhs) where the two series differ, or None.

    Terms are scanned in (qdeg, xdeg) order, so a mismatch is minimal.
    """
    s._check_order(t)
    keys = set(s._terms) | set(t._terms)
    for qdeg, xdeg in sorted(keys):
        a = s.coefficient(qdeg, xdeg)
        b = t.coefficient(qdeg, xdeg)
        if a != b:
            return (qdeg, xdeg, a, b)
    return None


# -- the two q-Gauss specialisations ---------------------------------------

QGAUSS_VARIANTS = ("tool1", "tool2")


def qgauss_sum_side(variant: str, order: int) -> TruncatedSeries:
    """Sum side of the chosen q-Gauss specialisation.

    tool1: sum over n >= 0 of (-xq; q^2)_n q^n / (-xq^2; q^2)_{n+1}
    tool2: sum over n >= 0 of (-xq^2; q^2)_n q^n / (-xq^5; q^2)_n

    The denominators are expanded as products of inverted factors; the sum
    stops once q^n passes the truncation order.
    """
    if variant not in QGAUSS_VARIANTS:
        raise SeriesError(f"unknown q-Gauss variant {variant!r}")
    total = TruncatedSeries.zero(order)
    numerator = TruncatedSeries.one(order)
    if variant == "tool1":
        denominator_inverse = invert_factor(Monomial(-1, 1, 2), order)
    else:
        denominator_inverse = TruncatedSeries.one(order)
    for n in range(order + 1):
        if n >= 1:
            if variant == "tool1":
                numerator = numerator - numerator.times_monomial(
                    Monomial(-1, 1, 2 * n - 1)
                )
                denominator_inverse = denominator_inverse * invert_factor(
                    Monomial(-1, 1, 2 * n + 2), order
                )
            else:
                numerator = numerator - numerator.times_monomial(
                    Monomial(-1, 1, 2 * n)
                )
                denominator_inverse = denominator_inverse * invert_factor(
                    Monomial(-1, 1, 2 * n + 3), order
                )
        term = (numerator * denominator_inverse).times_monomial(Monomial(1, 0, n))
        total = total + term
    return total


def qgauss_closed_side(variant: str, order: int) -> TruncatedSeries:
    """Closed form of the chosen specialisation: 1/(1-q) for tool1 and
    (1 + x*q^3)/(1-q) for tool2."""
    if variant not in QGAUSS_VARIANTS:
        raise SeriesError(f"unknown q-Gauss variant {variant!r}")
    geometric = invert_factor(Monomial(1, 0, 1), order)
    if variant == "tool1":
        return geometric
    prefactor = TruncatedSeries.one(order) + monomial_series(Monomial(1, 1, 3), order)
    return prefactor * geometric


def qgauss_check(variant: str, order: int) -> Optional[tuple[int, int, int, int]]:
    """Compare the two sides of a q-Gauss specialisation up to the order.

    Returns None when they agree, else the first differing coefficient as
    (qdeg, xdeg, lhs, rhs).
    """
    return first_mismatch(
        qgauss_sum_side(variant, order), qgauss_closed_side(variant, order)
    )
