"""Truncated graded series in even Chern symbols.

Elements are finite Q-linear combinations of monomials in the symbols
c2, c4, c6, ... (even indices only), graded by complex weight: c2k has
weight 2k and a monomial's weight is the sum over its factors.  A series
carries a truncation N and silently drops every product term of weight
above N, which is exactly the arithmetic of characteristic classes on a
manifold of complex dimension N.

Inverse and square root are defined for series with constant term 1 and
are computed degree by degree; both are exact and terminate because each
weight component depends only on lower ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exact import format_rational, parse_rational


class ChernMonomial:
    """A monomial in the symbols c2, c4, ...: e.g. c2^2*c4.

    Stored as a sorted tuple of (index, exponent) pairs with even positive
    indices and positive exponents.  The empty monomial is the unit.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = dict(factors)
        for index, exponent in items.items():
            if index <= 0 or index % 2 != 0:
                raise ValueError(f"Chern symbol index must be even and positive: {index}")
            if exponent < 0:
                raise ValueError(f"negative exponent on c{index}")
        object.__setattr__(
            self,
            "factors",
            tuple(sorted((i, e) for i, e in items.items() if e > 0)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("ChernMonomial is immutable")

    @property
    def weight(self) -> int:
        return sum(index * exponent for index, exponent in self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def __mul__(self, other: "ChernMonomial") -> "ChernMonomial":
        merged = dict(self.factors)
        for index, exponent in other.factors:
            merged[index] = merged.get(index, 0) + exponent
        return ChernMonomial(merged)

    def __eq__(self, other) -> bool:
        if isinstance(other, ChernMonomial):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"ChernMonomial({dict(self.factors)!r})"

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return "*".join(
            f"c{index}" if exponent == 1 else f"c{index}^{exponent}"
            for index, exponent in self.factors
        )

    def to_json(self) -> dict:
        return {str(index): exponent for index, exponent in self.factors}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "ChernMonomial":
        return cls({int(index): int(exponent) for index, exponent in data.items()})


UNIT = ChernMonomial()


class GradedSeries:
    """Finite series sum_m a_m * m over Chern monomials, truncated by weight."""

    __slots__ = ("truncation", "terms")

    def __init__(self, truncation: int, terms: Mapping[ChernMonomial, Fraction] = ()):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        cleaned = {}
        for monomial, coeff in dict(terms).items():
            coeff = Fraction(coeff)
            if coeff == 0 or monomial.weight > truncation:
                continue
            cleaned[monomial] = coeff
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("GradedSeries is immutable")

    @classmethod
    def one(cls, truncation: int) -> "GradedSeries":
        return cls(truncation, {UNIT: Fraction(1)})

    @classmethod
    def symbol(cls, index: int, truncation: int) -> "GradedSeries":
        return cls(truncation, {ChernMonomial({index: 1}): Fraction(1)})

    def coeff(self, monomial: ChernMonomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    def component(self, weight: int) -> dict[ChernMonomial, Fraction]:
        """All terms of the given weight."""
        return {m: c for m, c in self.terms.items() if m.weight == weight}

    @property
    def constant(self) -> Fraction:
        return self.coeff(UNIT)

    def _check_same_truncation(self, other: "GradedSeries") -> None:
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            other = GradedSeries(self.truncation, {UNIT: Fraction(other)})
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check_same_truncation(other)
        merged = dict(self.terms)
        for monomial, coeff in other.terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + coeff
        return GradedSeries(self.truncation, merged)

    __radd__ = __add__

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(self.truncation, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            other = GradedSeries(self.truncation, {UNIT: Fraction(other)})
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GradedSeries":
        return -(self - other)

    def __mul__(self, other) -> "GradedSeries":
        if isinstance(other, (int, Fraction)):
            return GradedSeries(
                self.truncation, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check_same_truncation(other)
        out: dict[ChernMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1.weight + m2.weight > self.truncation:
                    continue
                prod = m1 * m2
                out[prod] = out.get(prod, Fraction(0)) + c1 * c2
        return GradedSeries(self.truncation, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedSeries):
            return self.truncation == other.truncation and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        raise TypeError("GradedSeries is unhashable")

    def inverse(self) -> "GradedSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.constant != 1:
            raise ValueError("inverse requires constant term 1")
        return self._solve_triangular()

    def sqrt(self) -> "GradedSeries":
        """Square root with constant term 1, for a series with constant term 1."""
        if self.constant != 1:
            raise ValueError("sqrt requires constant term 1")
        result: dict[ChernMonomial, Fraction] = {UNIT: Fraction(1)}
        for weight in range(1, self.truncation + 1):
            # a_w = 2*s_w + sum_{0<v<w} s_v*s_{w-v}  (component identity of s*s = a)
            cross: dict[ChernMonomial, Fraction] = {}
            for m1, c1 in result.items():
                if not 0 < m1.weight < weight:
                    continue
                for m2, c2 in result.items():
                    if m2.weight != weight - m1.weight:
                        continue
                    prod = m1 * m2
                    cross[prod] = cross.get(prod, Fraction(0)) + c1 * c2
            target = self.component(weight)
            for monomial in set(cross) | set(target):
                value = (target.get(monomial, Fraction(0)) - cross.get(monomial, Fraction(0))) / 2
                if value:
                    result[monomial] = value
        return GradedSeries(self.truncation, result)

    def _solve_triangular(self) -> "GradedSeries":
        # r_w with r*self = 1: r_w = -(sum_{0<v<=w} a_v * r_{w-v})
        result: dict[ChernMonomial, Fraction] = {UNIT: Fraction(1)}
        for weight in range(1, self.truncation + 1):
            acc: dict[ChernMonomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                if not 0 < m1.weight <= weight:
                    continue
                for m2, c2 in result.items():
                    if m2.weight != weight - m1.weight:
                        continue
                    prod = m1 * m2
                    acc[prod] = acc.get(prod, Fraction(0)) + c1 * c2
            for monomial, value in acc.items():
                if value:
                    result[monomial] = result.get(monomial, Fraction(0)) - value
        return GradedSeries(self.truncation, result)

    # -- rendering / serialization ------------------------------------

    def sorted_terms(self) -> list[tuple[ChernMonomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].weight, kv[0].factors))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for monomial, coeff in self.sorted_terms():
            if monomial.is_unit:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(str(monomial))
            elif coeff == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{format_rational(coeff)}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GradedSeries({self.truncation}, {dict(self.terms)!r})"

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [
                {"monomial": m.to_json(), "coeff": format_rational(c)}
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedSeries":
        terms: dict[ChernMonomial, Fraction] = {}
        for entry in data["terms"]:
            monomial = ChernMonomial.from_json(entry["monomial"])
            coeff = parse_rational(str(entry["coeff"]))
            terms[monomial] = terms.get(monomial, Fraction(0)) + coeff
        return cls(int(data["truncation"]), terms)
