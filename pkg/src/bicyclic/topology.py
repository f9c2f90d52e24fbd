"""Arithmetic-progression neighbourhood bases on the bicyclic semigroups.

``U_n^r(i, j) = {(i, j + p^n k) : k >= 0}`` gives a right-continuous,
non-left-continuous Hausdorff topology; the side-``l`` neighbourhoods are
the images under the anti-isomorphism and behave dually.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass

from .core import Box, Domain, Elem, anti_iso, mul
from .families import Family, check_closure, ex37
from .report import CertReport, Status, combine

WITNESS_CAP_ENV = "BICYCLIC_WITNESS_CAP"
DEFAULT_WITNESS_CAP = 10**6


class Side(str, enum.Enum):
    R = "r"
    L = "l"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class BasicNbhd:
    base: Elem
    p: int
    n: int
    side: Side = Side.R

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 0:
            raise ValueError("exponent n must be >= 0")

    @property
    def step(self) -> int:
        return self.p**self.n

    @property
    def domain(self) -> Domain:
        return self.base.domain

    def __contains__(self, y: Elem) -> bool:
        return nbhd_contains(self, y)

    def member(self, k: int) -> Elem:
        if self.side is Side.R:
            return Elem(self.base.first, self.base.second + self.step * k, self.domain)
        return Elem(self.base.first + self.step * k, self.base.second, self.domain)

    def mirror(self) -> "BasicNbhd":
        """The neighbourhood on the other side with the anti-isomorphic base."""
        other = Side.L if self.side is Side.R else Side.R
        return BasicNbhd(anti_iso(self.base), self.p, self.n, other)

    def in_window(self, window: Box) -> list[Elem]:
        out = []
        for k in itertools.count():
            y = self.member(k)
            if y.first > window.hi1 or y.second > window.hi2:
                return out
            if y in window:
                out.append(y)

    def __str__(self):
        return f"U_{self.n}^{self.side.value}{self.base}[p={self.p}]"

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "p": self.p, "n": self.n, "side": self.side.value}


def nbhd_contains(U: BasicNbhd, y: Elem) -> bool:
    if y.domain is not U.domain:
        return False
    if U.side is Side.L:
        return nbhd_contains(U.mirror(), anti_iso(y))
    d = y.second - U.base.second
    return y.first == U.base.first and d >= 0 and d % U.step == 0


def nbhd_enumerate(U: BasicNbhd, count: int) -> list[Elem]:
    return [U.member(k) for k in range(count)]


def left_translate_nbhd(s: Elem, U: BasicNbhd) -> BasicNbhd:
    """Closed form of ``s * U`` for a side-``r`` neighbourhood ``U``."""
    if U.side is not Side.R:
        raise ValueError("closed-form left translation needs a side-r neighbourhood")
    if s.domain is not U.domain:
        raise ValueError("mixed domains")
    i1, j1 = s.first, s.second
    i2, j2 = U.base.first, U.base.second
    if j1 < i2:
        base = (i1 - j1 + i2, j2)
    elif j1 == i2:
        base = (i1, j2)
    else:
        base = (i1, j1 - i2 + j2)
    return BasicNbhd(Elem(*base, U.domain), U.p, U.n, Side.R)


def right_translate_nbhd(U: BasicNbhd, s: Elem) -> BasicNbhd:
    """Closed form of ``U * s`` for a side-``l`` neighbourhood, by anti-isomorphism."""
    if U.side is not Side.L:
        raise ValueError("closed-form right translation needs a side-l neighbourhood")
    return left_translate_nbhd(anti_iso(s), U.mirror()).mirror()


@dataclass(frozen=True)
class ContinuityVerdict:
    continuous: bool
    m: int | None = None
    witness_k: int | None = None
    escaped: Elem | None = None

    def to_json(self) -> dict:
        if self.continuous:
            return {"continuous": True, "m": self.m}
        return {"continuous": False, "witness_k": self.witness_k, "escaped": self.escaped.to_json()}


def right_continuity_check(s: Elem, x: Elem, p: int, n: int, side: Side = Side.R, samples: int = 50) -> ContinuityVerdict:
    """Continuity of the translation that is continuous on ``side``.

    Side ``r``: ``y -> s y`` at ``x``, via ``s U_n^r(x) = U_n^r(s x)``.
    Side ``l``: ``y -> y s`` at ``x``, the mirror statement.
    """
    side = Side(side)
    U = BasicNbhd(x, p, n, side)
    if side is Side.R:
        image = left_translate_nbhd(s, U)
        pointwise = lambda u: mul(s, u)  # noqa: E731
    else:
        image = right_translate_nbhd(U, s)
        pointwise = lambda u: mul(u, s)  # noqa: E731
    for k in range(samples):
        got = pointwise(U.member(k))
        if got != image.member(k):
            return ContinuityVerdict(False, witness_k=k, escaped=got)
    return ContinuityVerdict(True, m=n)


def witness_cap() -> int:
    return int(os.environ.get(WITNESS_CAP_ENV, DEFAULT_WITNESS_CAP))


def escape_ceiling(x: Elem, y: Elem, p: int, n: int) -> int:
    """``ceil((y.first - x.second) / p^n)``: beyond this the shifted point jumps past ``y``."""
    return -(-(y.first - x.second) // p**n)


def left_discontinuity_witness(x: Elem, y: Elem, p: int, n: int, m: int, side: Side = Side.R) -> ContinuityVerdict:
    """Witness that the discontinuous translation escapes every neighbourhood.

    Side ``r`` (needs ``x.second < y.first``): the least ``k`` such that
    ``u = (x.first, x.second + p^n k)`` has jumped past ``y.first`` and
    ``u y`` falls outside ``U_m^r(x y)``.  Smaller ``k >= 1`` also escape,
    through a shift of the first coordinate; the search insists on the jump
    because that escape works uniformly for all larger ``k``.

    Side ``l`` (needs ``y.first < x.second``): witness for ``u -> x u`` at
    ``y`` in the mirrored topology, obtained from side ``r`` by the
    anti-isomorphism.
    """
    side = Side(side)
    if side is Side.L:
        v = left_discontinuity_witness(anti_iso(y), anti_iso(x), p, n, m, Side.R)
        return ContinuityVerdict(False, witness_k=v.witness_k, escaped=anti_iso(v.escaped))
    if not x.second < y.first:
        raise ValueError("no escape guaranteed: need x.second < y.first")
    target = BasicNbhd(mul(x, y), p, m, Side.R)
    U = BasicNbhd(x, p, n, Side.R)
    ceiling = escape_ceiling(x, y, p, n)
    for k in range(witness_cap()):
        u = U.member(k)
        if u.second <= y.first:
            continue
        prod = mul(u, y)
        if not nbhd_contains(target, prod):
            if k > ceiling + 1:
                raise AssertionError(f"witness k={k} exceeds ceiling {ceiling} + 1")
            return ContinuityVerdict(False, witness_k=k, escaped=prod)
    raise RuntimeError(f"no witness within {witness_cap()} steps")


def _separation_exponent(x: Elem, y: Elem, p: int, side: Side) -> int:
    if side is Side.L:
        x, y = anti_iso(x), anti_iso(y)
    if x.first != y.first:
        return 0
    d = abs(x.second - y.second)
    n = 0
    while d % p**n == 0:
        n += 1
    return n


def _disjoint(U: BasicNbhd, V: BasicNbhd) -> bool:
    if U.side is Side.L:
        return _disjoint(U.mirror(), V.mirror())
    if U.base.first != V.base.first:
        return True
    # two upward progressions with equal step meet iff the step divides the offset
    return (U.base.second - V.base.second) % U.step != 0


def bp_axioms_check(domain: Domain, p: int, side: Side, window: Box, n_max: int) -> CertReport:
    """Neighbourhood-base axioms on a finite window.

    (i) each point lies in its neighbourhoods; (ii) two neighbourhoods of a
    point contain a third; (iii) each member of ``U_n(x)`` has a neighbourhood
    inside ``U_n(x)``; (iv) distinct points have disjoint neighbourhoods.
    Also records that no basic neighbourhood is a singleton.
    """
    domain, side = Domain(domain), Side(side)
    pts = list(window.points(domain))
    bad: dict[str, list] = {"base": [], "intersection": [], "open": [], "hausdorff": [], "singleton": []}
    nbhds = {(x, n): BasicNbhd(x, p, n, side) for x in pts for n in range(n_max + 1)}
    for (x, n), U in nbhds.items():
        if x not in U:
            bad["base"].append([x, n])
        if nbhd_enumerate(U, 2)[1] == x:
            bad["singleton"].append([x, n])
        for y in U.in_window(window):
            if not all(z in U for z in nbhds[(y, n)].in_window(window)):
                bad["open"].append([x, n, y])
    for x in pts:
        for n1, n2 in itertools.product(range(n_max + 1), repeat=2):
            W = nbhds[(x, max(n1, n2))]
            U1, U2 = nbhds[(x, n1)], nbhds[(x, n2)]
            if W.step % U1.step or W.step % U2.step or not all(z in U1 and z in U2 for z in W.in_window(window)):
                bad["intersection"].append([x, n1, n2])
    max_sep = 0
    for x, y in itertools.combinations(pts, 2):
        e = _separation_exponent(x, y, p, side)
        max_sep = max(max_sep, e)
        U, V = BasicNbhd(x, p, e, side), BasicNbhd(y, p, e, side)
        if not _disjoint(U, V) or set(U.in_window(window)) & set(V.in_window(window)):
            bad["hausdorff"].append([x, y, e])
    parts = []
    for name, found in bad.items():
        parts.append(CertReport(f"bp.{name}", Status.FAIL if found else Status.PASS, found[:5]))
    report = combine("topo.bp", parts, {"domain": domain, "p": p, "side": side, "window": window, "n_max": n_max})
    report.details.update({"points": len(pts), "max_separation_exponent": max_sep})
    return report


def separation_exponent(x: Elem, y: Elem, p: int, side: Side = Side.R) -> int:
    """Least exponent giving disjoint side-``side`` neighbourhoods of ``x != y``."""
    if x == y:
        raise ValueError("points must be distinct")
    return _separation_exponent(x, y, p, Side(side))


def induced_nbhd_check(F: Family, x: Elem, p: int, n: int, side: Side | None = None, samples: int = 200) -> CertReport:
    """Whether the first ``samples`` members of ``U_n(x)`` stay inside ``F``.

    The side defaults to ``r`` for families above the diagonal and ``l``
    for their mirrors.
    """
    if not F.contains(x):
        raise ValueError(f"{x} is not in {F}")
    side = Side(side) if side is not None else (Side.R if F.upper else Side.L)
    U = BasicNbhd(x, p, n, side)
    outside = [y for y in nbhd_enumerate(U, samples) if not F.contains(y)]
    return CertReport(
        "topo.induced",
        Status.FAIL if outside else Status.PASS,
        outside[:1],
        {"family": F, "x": x, "p": p, "n": n, "side": side, "samples": samples},
        {"outside": len(outside)},
    )


def induced_exponent(F: Family, x: Elem, p: int, n_max: int = 10, samples: int = 200) -> int | None:
    """Least ``n <= n_max`` with ``U_m(x)`` inside ``F`` for every ``n <= m <= n_max``."""
    good = [induced_nbhd_check(F, x, p, n, samples=samples).passed for n in range(n_max + 1)]
    for n in range(n_max + 1):
        if all(good[n:]):
            return n
    return None


def ex37_check(p: int, n_max: int, window: Box, kl_max: int = 8, samples: int = 30) -> CertReport:
    """Semigroup ``{(-i,-i) : i >= 1} u {(0,k) : k >= 0}`` with its progression topology.

    Checks closure and commutativity, that the row ``{(0, k)}`` is an ideal
    fixed by the diagonal, that the diagonal fixes each ``U_n(0, k)``, that
    ``U_n(0,k) U_n(0,l)`` lies in ``U_n(0,k+l)``, and that products of the
    isolated diagonal points are isolated diagonal points.
    """
    S = ex37()
    members = [x for x in window.points(Domain.CZ) if S.contains(x)]
    diag = [x for x in members if x.first < 0]
    row = [x for x in members if x.first == 0]
    parts = [check_closure(S, window)]

    bad = [[s, t] for s, t in itertools.product(members, repeat=2) if mul(s, t) != mul(t, s)]
    parts.append(CertReport("ex37.commutative", Status.FAIL if bad else Status.PASS, bad[:1]))

    bad = []
    for s, t in itertools.product(members, row):
        if mul(s, t).first != 0 or mul(t, s).first != 0:
            bad.append([s, t])
        if s in diag and (mul(s, t) != t or mul(t, s) != t):
            bad.append([s, t])
    parts.append(CertReport("ex37.ideal", Status.FAIL if bad else Status.PASS, bad[:1]))

    bad = []
    for d, k, n in itertools.product(diag, range(kl_max + 1), range(n_max + 1)):
        U = BasicNbhd(Elem(0, k, Domain.CZ), p, n)
        for u in nbhd_enumerate(U, samples):
            if mul(d, u) != u or mul(u, d) != u:
                bad.append([d, u])
    parts.append(CertReport("ex37.translation", Status.FAIL if bad else Status.PASS, bad[:1]))

    bad = []
    for k, l, n in itertools.product(range(kl_max + 1), range(kl_max + 1), range(n_max + 1)):
        Uk = BasicNbhd(Elem(0, k, Domain.CZ), p, n)
        Ul = BasicNbhd(Elem(0, l, Domain.CZ), p, n)
        Ukl = BasicNbhd(Elem(0, k + l, Domain.CZ), p, n)
        for u, v in itertools.product(nbhd_enumerate(Uk, samples), nbhd_enumerate(Ul, samples)):
            if mul(u, v) not in Ukl:
                bad.append([u, v])
    parts.append(CertReport("ex37.product", Status.FAIL if bad else Status.PASS, bad[:1]))

    bad = []
    for s, t in itertools.product(diag, repeat=2):
        top = max(s.first, t.first)
        if mul(s, t) != Elem(top, top, Domain.CZ) or not S.contains(mul(s, t)):
            bad.append([s, t])
    parts.append(CertReport("ex37.isolated", Status.FAIL if bad else Status.PASS, bad[:1]))

    return combine("topo.ex37", parts, {"p": p, "n_max": n_max, "window": window, "kl_max": kl_max})
