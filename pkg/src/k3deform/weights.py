"""Positive rational weight vectors.

A weight assigns a positive rational to each variable.  Weighted degrees of
monomials are exact ``Fraction`` values.  Every weight also carries a
primitive integer form (p_1, ..., p_n; p) with alpha_i = p_i / p and
gcd(p_1, ..., p_n, p) = 1, which is the form used in printed classifications.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class Weight:
    """Immutable vector of strictly positive rationals."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Fraction | int | str]):
        es = tuple(Fraction(e) for e in entries)
        if not es:
            raise ValueError("weight needs at least one entry")
        if any(e <= 0 for e in es):
            raise ValueError(f"weight entries must be positive: {es}")
        object.__setattr__(self, "entries", es)

    @classmethod
    def of(cls, *entries: Fraction | int | str) -> "Weight":
        return cls(entries)

    @property
    def nvars(self) -> int:
        return len(self.entries)

    def degree(self, exponent: Sequence[int]) -> Fraction:
        """Weighted degree of a single monomial exponent vector."""
        if len(exponent) != len(self.entries):
            raise ValueError("exponent length does not match weight length")
        return sum((a * e for a, e in zip(self.entries, exponent)), Fraction(0))

    def total(self) -> Fraction:
        """Sum of the weight entries."""
        return sum(self.entries, Fraction(0))

    def primitive(self) -> tuple[tuple[int, ...], int]:
        """Return (p_1..p_n, p) with entries p_i/p and gcd(p_1..p_n, p) = 1."""
        p = lcm(*(e.denominator for e in self.entries))
        ps = tuple(e.numerator * (p // e.denominator) for e in self.entries)
        g = gcd(p, *ps)
        return tuple(q // g for q in ps), p // g

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Weight is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(("Weight", self.entries))

    def __repr__(self) -> str:
        return "Weight(%s)" % ", ".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)
