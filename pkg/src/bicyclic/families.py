"""Subsemigroup families of the bicyclic monoid and the extended bicyclic semigroup.

Every family is a symbolic description with exact membership.  Index sets
``X = {x_0 < x_1 < ...}`` are a finite prefix plus an optional arithmetic
tail, which covers the sets used in practice (evens, odds, shifted copies,
finite truncations of squares).
"""

from __future__ import annotations

import enum
import itertools
import operator
from dataclasses import dataclass

from .core import Box, Domain, DomainError, Elem, is_idempotent, mul
from .report import CertReport, Status


class IndexOutOfRange(IndexError):
    """Index beyond a finite index set."""


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing sequence ``x_0 < x_1 < ...`` of nonnegative integers.

    ``prefix`` lists the first values explicitly; ``tail = (start, step)``
    continues with ``start, start + step, ...``.  The representation is
    canonical: prefix entries that already fit the tail are folded into it.
    """

    prefix: tuple[int, ...] = ()
    tail: tuple[int, int] | None = None

    def __post_init__(self):
        prefix = tuple(operator.index(v) for v in self.prefix)
        if any(v < 0 for v in prefix):
            raise ValueError("index set entries must be nonnegative")
        if any(a >= b for a, b in zip(prefix, prefix[1:])):
            raise ValueError(f"prefix must be strictly increasing: {list(prefix)}")
        tail = self.tail
        if tail is not None:
            start, step = (operator.index(v) for v in tail)
            if step <= 0:
                raise ValueError("tail step must be positive")
            if start < 0:
                raise ValueError("tail start must be nonnegative")
            if prefix and start <= prefix[-1]:
                raise ValueError(f"tail start {start} must exceed last prefix entry {prefix[-1]}")
            while prefix and prefix[-1] == start - step:
                prefix, start = prefix[:-1], start - step
            tail = (start, step)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @property
    def finite(self) -> bool:
        return self.tail is None

    @property
    def size(self) -> int | None:
        return len(self.prefix) if self.tail is None else None

    def at(self, i: int) -> int:
        if i < 0:
            raise IndexOutOfRange(f"negative index {i}")
        if i < len(self.prefix):
            return self.prefix[i]
        if self.tail is None:
            raise IndexOutOfRange(f"index {i} beyond finite index set of size {len(self.prefix)}")
        start, step = self.tail
        return start + step * (i - len(self.prefix))

    def index(self, v: int) -> int | None:
        """Position of ``v`` in the sequence, or None."""
        if v in self.prefix:
            return self.prefix.index(v)
        if self.tail is not None:
            start, step = self.tail
            if v >= start and (v - start) % step == 0:
                return len(self.prefix) + (v - start) // step
        return None

    def __contains__(self, v: int) -> bool:
        return self.index(v) is not None

    def next_at_least(self, v: int) -> int | None:
        """Least member ``>= v``; None if the set is finite and exhausted."""
        for x in self.prefix:
            if x >= v:
                return x
        if self.tail is None:
            return None
        start, step = self.tail
        if v <= start:
            return start
        return start + -(-(v - start) // step) * step

    def take(self, n: int) -> list[int]:
        if self.size is not None:
            n = min(n, self.size)
        return [self.at(i) for i in range(n)]

    def with_value(self, i: int, v: int) -> "IndexSet":
        """Copy with ``x_i`` replaced by ``v``; must stay strictly increasing."""
        if self.tail is None:
            values = list(self.prefix)
            values[i] = v
            return IndexSet(tuple(values))
        start, step = self.tail
        n = max(i + 1, len(self.prefix))
        values = [self.at(t) for t in range(n)]
        values[i] = v
        return IndexSet(tuple(values), (start + step * (n - len(self.prefix)), step))

    def __str__(self):
        shown = self.take(6)
        more = ",..." if self.size is None or self.size > 6 else ""
        return "{" + ",".join(map(str, shown)) + more + "}"

    def to_json(self) -> dict:
        tail = None if self.tail is None else {"start": self.tail[0], "step": self.tail[1]}
        return {"prefix": list(self.prefix), "tail": tail}

    @classmethod
    def from_json(cls, doc: dict) -> "IndexSet":
        tail = doc.get("tail")
        if tail is not None:
            tail = (tail["start"], tail["step"])
        return cls(tuple(doc.get("prefix", ())), tail)


def evens() -> IndexSet:
    return IndexSet((), (0, 2))


def odds() -> IndexSet:
    return IndexSet((), (1, 2))


def naturals() -> IndexSet:
    return IndexSet((), (0, 1))


def squares(count: int = 16) -> IndexSet:
    return IndexSet(tuple(t * t for t in range(count)))


PRESETS = {
    "evens": evens,
    "odds": odds,
    "naturals": naturals,
    "squares16": lambda: squares(16),
}


def iota(X: IndexSet, Y: IndexSet, i: int) -> tuple[int, int]:
    """The pair ``(x_i, y_i)`` matched by the order isomorphism ``X -> Y``."""
    return X.at(i), Y.at(i)


class Kind(str, enum.Enum):
    CPLUS = "cplus"
    CMINUS = "cminus"
    CPLUS_K = "cplusk"
    CPLUS_KX = "cpluskx"
    CMINUS_KX = "cminuskx"
    CZ_PLUS = "czplus"
    CZ_MINUS = "czminus"
    CZ_PLUS_SHIFT = "czplusshift"
    CZ_PLUS_KX = "czpluskx"
    EX37 = "ex37"
    # not a subsemigroup; kept as a named counterexample
    L_TILDE = "ltilde"


_OMEGA_KINDS = {Kind.CPLUS, Kind.CMINUS, Kind.CPLUS_K, Kind.CPLUS_KX, Kind.CMINUS_KX}
_NEEDS_K = {Kind.CPLUS_K, Kind.CPLUS_KX, Kind.CMINUS_KX, Kind.CZ_PLUS_SHIFT, Kind.CZ_PLUS_KX, Kind.L_TILDE}
_NEEDS_X = {Kind.CPLUS_KX, Kind.CMINUS_KX, Kind.CZ_PLUS_KX}
_UPPER = {Kind.CPLUS, Kind.CPLUS_K, Kind.CPLUS_KX, Kind.CZ_PLUS, Kind.CZ_PLUS_SHIFT, Kind.CZ_PLUS_KX, Kind.EX37}


@dataclass(frozen=True)
class Family:
    kind: Kind
    k: int | None = None
    X: IndexSet | None = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in _NEEDS_K:
            if self.k is None:
                raise ValueError(f"family {kind.value} needs parameter k")
            object.__setattr__(self, "k", operator.index(self.k))
        elif self.k is not None:
            raise ValueError(f"family {kind.value} takes no parameter k")
        if kind is Kind.CPLUS_K and self.k < 0:
            raise ValueError("k must be >= 0")
        if kind in _NEEDS_X:
            if self.k < 1:
                raise ValueError("k must be >= 1")
            if self.X is None:
                raise ValueError(f"family {kind.value} needs an index set X")
        elif self.X is not None:
            raise ValueError(f"family {kind.value} takes no index set")

    @property
    def domain(self) -> Domain:
        return Domain.BOMEGA if self.kind in _OMEGA_KINDS else Domain.CZ

    @property
    def upper(self) -> bool:
        """Members all satisfy ``first <= second``."""
        return self.kind in _UPPER

    @property
    def floor(self) -> int | None:
        """Least coordinate any member can have, or None if unbounded below."""
        if self.domain is Domain.BOMEGA:
            return 0
        if self.kind is Kind.CZ_PLUS_SHIFT:
            return self.k
        return None

    def __str__(self):
        args = []
        if self.k is not None:
            args.append(str(self.k))
        if self.X is not None:
            args.append(str(self.X))
        return self.kind.value + (f"({', '.join(args)})" if args else "")

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind.value}
        if self.k is not None:
            doc["k"] = self.k
        if self.X is not None:
            doc["X"] = self.X.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Family":
        kind = Kind(doc["kind"])
        X = doc.get("X")
        return cls(kind, doc.get("k"), None if X is None else IndexSet.from_json(X))

    def contains(self, x: Elem) -> bool:
        if x.domain is not self.domain:
            raise DomainError(f"incompatible domain: {x.domain.value} element, {self.domain.value} family")
        i, j = x.first, x.second
        kind = self.kind
        if kind is Kind.CPLUS or kind is Kind.CZ_PLUS:
            return i <= j
        if kind is Kind.CMINUS or kind is Kind.CZ_MINUS:
            return i >= j
        if kind is Kind.CPLUS_K:
            return j - i >= self.k
        if kind is Kind.CPLUS_KX:
            return j - i >= self.k or (i == j and i in self.X)
        if kind is Kind.CMINUS_KX:
            return i - j >= self.k or (i == j and i in self.X)
        if kind is Kind.CZ_PLUS_SHIFT:
            return self.k <= i <= j
        if kind is Kind.CZ_PLUS_KX:
            if i == j:
                return i <= 0 or i in self.X
            return i >= 0 and j - i >= self.k
        if kind is Kind.EX37:
            return (i == j and i <= -1) or (i == 0 and j >= 0)
        if kind is Kind.L_TILDE:
            return i == self.k
        raise AssertionError(kind)

    __contains__ = contains

    def diagonal_next(self, t: int) -> int | None:
        """Least ``q > t`` with ``(q, q)`` in the family, or None."""
        q = t + 1
        kind = self.kind
        if kind in (Kind.CPLUS, Kind.CMINUS, Kind.CZ_PLUS, Kind.CZ_MINUS, Kind.CZ_PLUS_SHIFT):
            lo = self.floor
            return q if lo is None else max(q, lo)
        if kind is Kind.CPLUS_K:
            return max(q, 0) if self.k == 0 else None
        if kind in (Kind.CPLUS_KX, Kind.CMINUS_KX):
            return self.X.next_at_least(max(q, 0))
        if kind is Kind.CZ_PLUS_KX:
            return q if q <= 0 else self.X.next_at_least(q)
        if kind is Kind.EX37:
            return q if q <= 0 else None
        if kind is Kind.L_TILDE:
            return self.k if q <= self.k else None
        raise AssertionError(kind)


def cplus() -> Family:
    return Family(Kind.CPLUS)


def cminus() -> Family:
    return Family(Kind.CMINUS)


def cplus_k(k: int) -> Family:
    return Family(Kind.CPLUS_K, k)


def cplus_kx(k: int, X: IndexSet) -> Family:
    return Family(Kind.CPLUS_KX, k, X)


def cminus_kx(k: int, X: IndexSet) -> Family:
    return Family(Kind.CMINUS_KX, k, X)


def cz_plus() -> Family:
    return Family(Kind.CZ_PLUS)


def cz_minus() -> Family:
    return Family(Kind.CZ_MINUS)


def cz_plus_shift(k: int) -> Family:
    return Family(Kind.CZ_PLUS_SHIFT, k)


def cz_plus_kx(k: int, X: IndexSet) -> Family:
    return Family(Kind.CZ_PLUS_KX, k, X)


def ex37() -> Family:
    return Family(Kind.EX37)


def l_tilde(i0: int) -> Family:
    return Family(Kind.L_TILDE, i0)


def enumerate_window(F: Family, window: Box) -> list[Elem]:
    return [x for x in window.points(F.domain) if F.contains(x)]


def _witness_rank(x: Elem, y: Elem):
    # squares first, then pairs nearest the diagonal, then lexicographic
    return (x != y, abs(x.diff) + abs(y.diff), x, y)


def check_closure(F: Family, window: Box) -> CertReport:
    members = enumerate_window(F, window)
    best = None
    failures = 0
    for x, y in itertools.product(members, repeat=2):
        if not F.contains(mul(x, y)):
            failures += 1
            if best is None or _witness_rank(x, y) < _witness_rank(*best):
                best = (x, y)
    params = {"family": F, "window": window}
    details = {"members": len(members), "pairs": len(members) ** 2, "failures": failures}
    if best is None:
        return CertReport("closure", Status.PASS, [], params, details)
    x, y = best
    details["product"] = mul(x, y)
    return CertReport("closure", Status.FAIL, [[x, y]], params, details)


def h_k(x: Elem, k: int) -> Elem:
    """Shift embedding of the monoid ``i <= j`` part of BOmega onto ``{(s, t) : k <= s <= t}`` in CZ."""
    if x.domain is not Domain.BOMEGA or x.first > x.second:
        raise ValueError(f"h_k is defined on C+ only, got {x} in {x.domain.value}")
    return Elem(x.first + k, x.second + k, Domain.CZ)


def h_k_inverse(y: Elem, k: int) -> Elem:
    if y.domain is not Domain.CZ or not (k <= y.first <= y.second):
        raise ValueError(f"{y} is not in the image of h_{k}")
    return Elem(y.first - k, y.second - k, Domain.BOMEGA)


class BoundTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Solutions:
    solutions: tuple[Elem, ...]
    bound: Box

    @property
    def count(self) -> int:
        return len(self.solutions)

    def to_json(self) -> dict:
        return {"count": self.count, "solutions": [s.to_json() for s in self.solutions], "bound": self.bound.to_json()}


def default_solution_bound(F: Family, e: Elem, target: Elem) -> Box:
    lo = F.floor
    if lo is None:
        raise ValueError(f"family {F} is unbounded below; pass an explicit bound")
    hi1 = max(target.first, e.first + target.second)
    return Box(lo, hi1, lo, target.second)


def _solve(F: Family, e: Elem, target: Elem, bound: Box) -> tuple[Elem, ...]:
    return tuple(z for z in enumerate_window(F, bound) if mul(e, z) == target)


def solution_count(F: Family, e: Elem, target: Elem, bound: Box | None = None) -> Solutions:
    """All ``z`` in ``F`` with ``e * z = target``.

    The default bound is sound by the case analysis of the product.  A
    caller-supplied bound is probed one step wider on every open side; any new
    solution there raises :class:`BoundTooSmall`.
    """
    if not is_idempotent(e) or not F.contains(e):
        raise ValueError(f"{e} is not an idempotent of {F}")
    if not F.contains(target):
        raise ValueError(f"{target} is not in {F}")
    if bound is None:
        bound = default_solution_bound(F, e, target)
        return Solutions(_solve(F, e, target, bound), bound)
    found = _solve(F, e, target, bound)
    wider = bound.expand(1)
    if F.floor is not None:
        wider = Box(max(wider.lo1, F.floor), wider.hi1, max(wider.lo2, F.floor), wider.hi2)
    if len(_solve(F, e, target, wider)) != len(found):
        raise BoundTooSmall(f"solutions reach the edge of {bound}; use a larger bound")
    return Solutions(found, bound)


@dataclass(frozen=True)
class IsoVerdict:
    identical: bool
    depth: int
    index: int | None = None
    x: int | None = None
    y: int | None = None

    def __str__(self):
        if self.identical:
            return f"identical through depth {self.depth}"
        return f"differ at index {self.index} ({self.x} != {self.y})"

    def to_json(self) -> dict:
        return {"identical": self.identical, "depth": self.depth, "index": self.index, "x": self.x, "y": self.y}


def iso_classify(X: IndexSet, Y: IndexSet, depth: int) -> IsoVerdict:
    """Compare ``x_i`` and ``y_i`` for ``i < depth``.

    Two families ``cpluskx(1, X)`` and ``cpluskx(1, Y)`` (likewise
    ``czpluskx(1, .)``) are isomorphic exactly when the sequences agree, so
    the first differing index separates them.
    """
    for i in range(depth):
        x, y = X.at(i), Y.at(i)
        if x != y:
            return IsoVerdict(False, depth, i, x, y)
    return IsoVerdict(True, depth)


def solution_profile(F: Family, depth: int) -> list[int]:
    """Solution counts of ``(x_i, x_i) * z = (x_i, x_i + 1)`` for ``i < depth``.

    For ``cpluskx(1, X)`` entry ``i`` equals ``x_i + 1``; an isomorphism
    preserves these counts, which is how the isomorphism type pins down ``X``.
    """
    if F.kind is not Kind.CPLUS_KX:
        raise ValueError("solution_profile is defined for cpluskx families")
    out = []
    for i in range(depth):
        q = F.X.at(i)
        out.append(solution_count(F, Elem(q, q, Domain.BOMEGA), Elem(q, q + 1, Domain.BOMEGA)).count)
    return out


def parse_family(doc: dict | str) -> Family:
    """Build a family from a config document or a ``kind[:k][:preset]`` string."""
    if isinstance(doc, str):
        parts = doc.strip().lower().split(":")
        out: dict = {"kind": parts[0]}
        rest = parts[1:]
        if rest and rest[-1] in PRESETS:
            out["X"] = PRESETS[rest.pop()]().to_json()
        if rest:
            out["k"] = int(rest.pop(0))
        if rest:
            raise ValueError(f"unexpected family fields {rest} in {doc!r}")
        doc = out
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("family document must be an object with a 'kind'")
    try:
        kind = Kind(str(doc["kind"]).lower())
    except ValueError:
        raise ValueError(f"unknown family kind {doc['kind']!r}") from None
    X = doc.get("X")
    if isinstance(X, str):
        if X not in PRESETS:
            raise ValueError(f"unknown index set preset {X!r}")
        X = PRESETS[X]()
    elif X is not None:
        X = IndexSet.from_json(X)
    return Family(kind, doc.get("k"), X)
