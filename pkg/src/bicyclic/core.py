"""Exact arithmetic in the bicyclic monoid and the extended bicyclic semigroup.

Elements are pairs ``(i, j)`` standing for the normal form ``b^i a^j``.  The
same three-case product works on ``omega x omega`` (the bicyclic monoid) and
on ``Z x Z`` (the extended bicyclic semigroup); a domain tag keeps the two
apart.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Iterator


class Domain(str, enum.Enum):
    BOMEGA = "BOmega"
    CZ = "CZ"


class DomainError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Elem:
    first: int
    second: int
    domain: Domain = Domain.CZ

    def __post_init__(self):
        if type(self.first) is not int or type(self.second) is not int:
            object.__setattr__(self, "first", operator.index(self.first))
            object.__setattr__(self, "second", operator.index(self.second))
        if type(self.domain) is not Domain:
            object.__setattr__(self, "domain", Domain(self.domain))
        if self.domain is Domain.BOMEGA and (self.first < 0 or self.second < 0):
            raise DomainError(f"negative coordinate in BOmega: ({self.first},{self.second})")

    def __str__(self):
        return f"({self.first},{self.second})"

    @property
    def diff(self) -> int:
        """``second - first``; additive under multiplication."""
        return self.second - self.first

    def to_json(self) -> dict:
        return {"domain": self.domain.value, "i": self.first, "j": self.second}

    @classmethod
    def from_json(cls, doc: dict) -> "Elem":
        return cls(doc["i"], doc["j"], Domain(doc["domain"]))


def B(i: int, j: int) -> Elem:
    return Elem(i, j, Domain.BOMEGA)


def Z(i: int, j: int) -> Elem:
    return Elem(i, j, Domain.CZ)


def _same_domain(x: Elem, y: Elem) -> Domain:
    if x.domain is not y.domain:
        raise DomainError("mixed domains")
    return x.domain


def mul(x: Elem, y: Elem) -> Elem:
    dom = _same_domain(x, y)
    k, l, m, n = x.first, x.second, y.first, y.second
    if l < m:
        return Elem(k - l + m, n, dom)
    if l == m:
        return Elem(k, n, dom)
    return Elem(k, l - m + n, dom)


def word(x: Elem) -> str:
    return "b" * x.first + "a" * x.second


def normalize_word(w: str) -> tuple[int, int]:
    """Rewrite ``ab -> 1`` until no factor ``ab`` remains; return the exponents of ``b^i a^j``."""
    while "ab" in w:
        w = w.replace("ab", "")
    i = len(w) - len(w.lstrip("b"))
    if "b" in w[i:]:
        raise AssertionError(f"word not in normal form after rewriting: {w!r}")
    return i, len(w) - i


def mul_oracle(x: Elem, y: Elem) -> Elem:
    """Multiply by concatenating words and rewriting with ``ab = 1``.

    Only defined on the bicyclic monoid; it is an independent check of :func:`mul`.
    """
    if x.domain is not Domain.BOMEGA or y.domain is not Domain.BOMEGA:
        raise DomainError("mul_oracle is only defined on BOmega")
    return B(*normalize_word(word(x) + word(y)))


def is_idempotent(x: Elem) -> bool:
    return x.first == x.second


def inverse(x: Elem) -> Elem:
    return Elem(x.second, x.first, x.domain)


def anti_iso(x: Elem) -> Elem:
    """The anti-isomorphism ``b^i a^j -> b^j a^i``."""
    return Elem(x.second, x.first, x.domain)


def nat_leq(x: Elem, y: Elem) -> bool:
    """Natural partial order: ``x <= y`` iff ``x = e y`` for an idempotent ``e``."""
    _same_domain(x, y)
    return x.first - x.second == y.first - y.second and y.first <= x.first


@dataclass(frozen=True)
class Box:
    """Inclusive coordinate window ``[lo1..hi1] x [lo2..hi2]``."""

    lo1: int
    hi1: int
    lo2: int
    hi2: int

    @classmethod
    def square(cls, lo: int, hi: int) -> "Box":
        return cls(lo, hi, lo, hi)

    @classmethod
    def parse(cls, text: str) -> "Box":
        """Parse ``a..b`` (square) or ``a..b,c..d``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (1, 2):
            raise ValueError(f"bad window {text!r}")
        ranges = []
        for part in parts:
            lo, sep, hi = part.partition("..")
            if not sep:
                raise ValueError(f"bad window range {part!r}, expected a..b")
            ranges.append((int(lo), int(hi)))
        if len(ranges) == 1:
            ranges.append(ranges[0])
        (a, b), (c, d) = ranges
        return cls(a, b, c, d)

    def __str__(self):
        return f"{self.lo1}..{self.hi1},{self.lo2}..{self.hi2}"

    @property
    def empty(self) -> bool:
        return self.lo1 > self.hi1 or self.lo2 > self.hi2

    def clip(self, domain: Domain) -> "Box":
        if domain is Domain.BOMEGA:
            return Box(max(self.lo1, 0), self.hi1, max(self.lo2, 0), self.hi2)
        return self

    def __contains__(self, x: Elem) -> bool:
        return self.lo1 <= x.first <= self.hi1 and self.lo2 <= x.second <= self.hi2

    def points(self, domain: Domain = Domain.CZ) -> Iterator[Elem]:
        """All points in lexicographic order; BOmega windows are clipped at 0."""
        b = self.clip(domain)
        for i in range(b.lo1, b.hi1 + 1):
            for j in range(b.lo2, b.hi2 + 1):
                yield Elem(i, j, domain)

    def expand(self, by: int = 1) -> "Box":
        return Box(self.lo1 - by, self.hi1 + by, self.lo2 - by, self.hi2 + by)

    def to_json(self) -> list:
        return [[self.lo1, self.hi1], [self.lo2, self.hi2]]


def up_set(x: Elem, window: Box) -> list[Elem]:
    return [y for y in window.points(x.domain) if nat_leq(x, y)]


def down_set(x: Elem, window: Box) -> list[Elem]:
    return [y for y in window.points(x.domain) if nat_leq(y, x)]
