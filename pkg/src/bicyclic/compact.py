"""The compact semigroup ``S+_O = G1+ u C_Z+ u G0+ u {O}`` containing ``C_Z+`` densely.

``G1+`` and ``G0+`` are copies of ``(omega, +)`` glued to the upper half
``C_Z+ = {(i, j) : i <= j}`` of the extended bicyclic semigroup; ``O`` is an
adjoined zero.  Every element has a degree (``n``, ``j - i`` or ``m``) that
is additive under multiplication, and the neighbourhoods of ``O`` are the
sets of degree ``>= p``.  Most of the inclusions checked here reduce to that.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .core import Domain, Elem
from .report import CertReport, Status, combine


class ClosureError(ArithmeticError):
    """A product left ``S+_O``."""


@dataclass(frozen=True, order=True)
class G1:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ClosureError(f"G1 payload must be >= 0, got {self.n}")

    def __str__(self):
        return f"({self.n})^1"

    def to_json(self):
        return {"tag": "g1", "n": self.n}


@dataclass(frozen=True, order=True)
class C:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            raise ClosureError(f"C point needs i <= j, got ({self.i},{self.j})")

    def __str__(self):
        return f"({self.i},{self.j})"

    def elem(self) -> Elem:
        return Elem(self.i, self.j, Domain.CZ)

    def to_json(self):
        return {"tag": "c", "i": self.i, "j": self.j}


@dataclass(frozen=True, order=True)
class G0:
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ClosureError(f"G0 payload must be >= 0, got {self.m}")

    def __str__(self):
        return f"({self.m})^0"

    def to_json(self):
        return {"tag": "g0", "m": self.m}


@dataclass(frozen=True, order=True)
class Zero:
    def __str__(self):
        return "O"

    def to_json(self):
        return {"tag": "zero"}


ZERO = Zero()
CompactElem = Union[G1, C, G0, Zero]


def from_json(doc: dict) -> CompactElem:
    tag = doc["tag"]
    if tag == "g1":
        return G1(doc["n"])
    if tag == "c":
        return C(doc["i"], doc["j"])
    if tag == "g0":
        return G0(doc["m"])
    if tag == "zero":
        return ZERO
    raise ValueError(f"unknown tag {tag!r}")


def parse_compact(text: str) -> CompactElem:
    """``g1:n``, ``g0:m``, ``c:i,j`` or ``zero``."""
    text = text.strip().lower()
    if text in ("zero", "o"):
        return ZERO
    tag, _, payload = text.partition(":")
    if tag == "g1":
        return G1(int(payload))
    if tag == "g0":
        return G0(int(payload))
    if tag == "c":
        i, j = payload.split(",")
        return C(int(i), int(j))
    raise ValueError(f"cannot parse compact element {text!r}")


def degree(x: CompactElem) -> int | None:
    if isinstance(x, G1):
        return x.n
    if isinstance(x, C):
        return x.j - x.i
    if isinstance(x, G0):
        return x.m
    return None


def mul_compact(x: CompactElem, y: CompactElem) -> CompactElem:
    if isinstance(x, Zero) or isinstance(y, Zero):
        return ZERO
    if isinstance(x, G1):
        if isinstance(y, G1):
            return G1(x.n + y.n)
        if isinstance(y, C):
            return C(-x.n + y.i, y.j)
        return G0(x.n + y.m)
    if isinstance(x, C):
        if isinstance(y, G1):
            return C(x.i, x.j + y.n)
        if isinstance(y, C):
            if x.j < y.i:
                return C(x.i - x.j + y.i, y.j)
            if x.j == y.i:
                return C(x.i, y.j)
            return C(x.i, x.j - y.i + y.j)
        return G0(y.m + x.j - x.i)
    if isinstance(y, C):
        return G0(x.m + y.j - y.i)
    return G0(x.m + (y.n if isinstance(y, G1) else y.m))


def in_ideal(x: CompactElem) -> bool:
    """Membership in ``I0 = G0+ u {O}``."""
    return isinstance(x, (G0, Zero))


def rees_quotient(x: CompactElem) -> CompactElem:
    return ZERO if in_ideal(x) else x


def mul_quotient(x: CompactElem, y: CompactElem) -> CompactElem:
    """Multiplication in ``S+_O / I0``."""
    return rees_quotient(mul_compact(x, y))


def window(bound: int) -> list[CompactElem]:
    """Generating window: payloads ``<= bound``, C points in ``[-bound..bound]`` with ``i <= j``, and zero."""
    out: list[CompactElem] = [G1(n) for n in range(bound + 1)]
    out += [C(i, j) for i in range(-bound, bound + 1) for j in range(i, bound + 1)]
    out += [G0(m) for m in range(bound + 1)]
    out.append(ZERO)
    return out


# -- neighbourhoods ---------------------------------------------------------


@dataclass(frozen=True)
class CompactNbhd:
    """Basic neighbourhood: ``kind`` is ``singleton``, ``U``, ``V`` or ``W``.

    ``U_p((n)^1) = {(n)^1} u {(-q, -q+n) : q >= p}``,
    ``V_p((m)^0) = {(m)^0} u {(q, q+m) : q >= p}``,
    ``W_p(O)`` = ``O`` together with everything of degree ``>= p``.
    """

    kind: str
    center: CompactElem
    p: int = 1

    def __contains__(self, x: CompactElem) -> bool:
        return nbhd_contains(self, x)

    def __str__(self):
        return f"{self.kind}_{self.p}({self.center})" if self.kind != "singleton" else f"{{{self.center}}}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "center": self.center.to_json(), "p": self.p}


def nbhd_compact(center: CompactElem, p: int) -> CompactNbhd:
    if p < 1:
        raise ValueError("p must be >= 1")
    if isinstance(center, C):
        return CompactNbhd("singleton", center, p)
    if isinstance(center, G1):
        return CompactNbhd("U", center, p)
    if isinstance(center, G0):
        return CompactNbhd("V", center, p)
    return CompactNbhd("W", center, p)


def nbhd_contains(N: CompactNbhd, x: CompactElem) -> bool:
    if x == N.center:
        return True
    if N.kind == "singleton":
        return False
    if N.kind == "U":
        n = N.center.n
        return isinstance(x, C) and x.i <= -N.p and x.j - x.i == n
    if N.kind == "V":
        m = N.center.m
        return isinstance(x, C) and x.i >= N.p and x.j - x.i == m
    return not isinstance(x, Zero) and degree(x) >= N.p


def nbhd_members(N: CompactNbhd) -> Iterator[CompactElem]:
    """Members in a fixed order: the center first, then increasing clause parameter."""
    yield N.center
    if N.kind == "singleton":
        return
    if N.kind == "U":
        n = N.center.n
        for q in itertools.count(N.p):
            yield C(-q, -q + n)
    elif N.kind == "V":
        m = N.center.m
        for q in itertools.count(N.p):
            yield C(q, q + m)
    else:
        for t in itertools.count():
            yield G1(N.p + t)
            yield G0(N.p + t)
            # C points of degree p + d with |i| + d = t
            for d in range(t + 1):
                r = t - d
                yield C(r, r + N.p + d)
                if r:
                    yield C(-r, -r + N.p + d)


@functools.lru_cache(maxsize=4096)
def nbhd_take(N: CompactNbhd, count: int) -> tuple[CompactElem, ...]:
    return tuple(itertools.islice(nbhd_members(N), count))


# -- continuity at the zero --------------------------------------------------


@dataclass(frozen=True)
class Clause:
    """One membership clause of a neighbourhood: a tag and a degree constraint."""

    tag: type
    degree: int | None
    exact: bool

    def __str__(self):
        if self.tag is Zero:
            return "O"
        rel = "=" if self.exact else ">="
        return f"{self.tag.__name__}[deg{rel}{self.degree}]"


def clauses(N: CompactNbhd) -> list[Clause]:
    if N.kind == "singleton":
        return [Clause(C, degree(N.center), True)]
    if N.kind == "U":
        return [Clause(G1, N.center.n, True), Clause(C, N.center.n, True)]
    if N.kind == "V":
        return [Clause(G0, N.center.m, True), Clause(C, N.center.m, True)]
    return [Clause(Zero, None, True), Clause(G1, N.p, False), Clause(C, N.p, False), Clause(G0, N.p, False)]


_TAG_PRODUCT = {
    (G1, G1): G1, (G1, C): C, (G1, G0): G0,
    (C, G1): C, (C, C): C, (C, G0): G0,
    (G0, G1): G0, (G0, C): G0, (G0, G0): G0,
}


def clause_product(a: Clause, b: Clause) -> Clause:
    if a.tag is Zero or b.tag is Zero:
        return Clause(Zero, None, True)
    return Clause(_TAG_PRODUCT[(a.tag, b.tag)], a.degree + b.degree, a.exact and b.exact)


def clause_in_w(c: Clause, p: int) -> bool:
    """Whether every element matching ``c`` lies in ``W_p(O)``."""
    return c.tag is Zero or c.degree >= p


PROP43_CASES = {
    1: ("U_{p1}((n)^1) * W_{p2}(O) <= W_{n+p2}(O)", ("n", "p1", "p2")),
    2: ("W_{p1}(O) * U_{p2}((n)^1) <= W_{p1+n}(O)", ("n", "p1", "p2")),
    3: ("(i,j) * W_p(O) <= W_{p+j-i}(O)", ("i", "j", "p")),
    4: ("W_p(O) * (i,j) <= W_{p+j-i}(O)", ("i", "j", "p")),
    5: ("V_{p1}((m)^0) * W_{p2}(O) <= W_{m+p2}(O)", ("m", "p1", "p2")),
    6: ("W_{p1}(O) * V_{p2}((m)^0) <= W_{p1+m}(O)", ("m", "p1", "p2")),
    7: ("W_{p1}(O) * W_{p2}(O) <= W_{p1+p2}(O)", ("p1", "p2")),
}


def prop43_sides(case: int, params: dict) -> tuple[CompactNbhd, CompactNbhd, int]:
    """Left factor, right factor and the target index ``r`` of ``W_r(O)``."""
    g = params.get
    W = lambda p: nbhd_compact(ZERO, p)  # noqa: E731
    if case == 1:
        return nbhd_compact(G1(g("n")), g("p1")), W(g("p2")), g("n") + g("p2")
    if case == 2:
        return W(g("p1")), nbhd_compact(G1(g("n")), g("p2")), g("p1") + g("n")
    if case == 3:
        pt = C(g("i"), g("j"))
        return nbhd_compact(pt, 1), W(g("p")), g("p") + g("j") - g("i")
    if case == 4:
        pt = C(g("i"), g("j"))
        return W(g("p")), nbhd_compact(pt, 1), g("p") + g("j") - g("i")
    if case == 5:
        return nbhd_compact(G0(g("m")), g("p1")), W(g("p2")), g("m") + g("p2")
    if case == 6:
        return W(g("p1")), nbhd_compact(G0(g("m")), g("p2")), g("p1") + g("m")
    if case == 7:
        return W(g("p1")), W(g("p2")), g("p1") + g("p2")
    raise ValueError(f"case must be 1..7, got {case}")


def _pairs(left: CompactNbhd, right: CompactNbhd, count: int) -> Iterator[tuple]:
    """The first ``count`` pairs of members, ordered by index sum."""
    a = nbhd_take(left, count)
    b = nbhd_take(right, count)
    emitted = 0
    for total in range(len(a) + len(b) - 1):
        for s in range(max(0, total - len(b) + 1), min(total, len(a) - 1) + 1):
            yield a[s], b[total - s]
            emitted += 1
            if emitted >= count:
                return


def prop43_check(case: int, params: dict, sample_size: int = 100) -> CertReport:
    """Clause-by-clause derivation plus sampling for one continuity inclusion at ``O``."""
    if case not in PROP43_CASES:
        raise ValueError(f"case must be 1..7, got {case}")
    label, names = PROP43_CASES[case]
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError(f"case {case} needs parameters {missing}")
    left, right, r = prop43_sides(case, params)
    W_r = nbhd_compact(ZERO, max(r, 1))
    verdicts = []
    witnesses = []
    for a, b in itertools.product(clauses(left), clauses(right)):
        prod = clause_product(a, b)
        ok = clause_in_w(prod, r)
        verdicts.append({"left": str(a), "right": str(b), "product": str(prod), "ok": ok})
        if not ok:
            witnesses.append({"clause": [str(a), str(b)], "product": str(prod)})
    sampled = 0
    for x, y in _pairs(left, right, sample_size):
        z = mul_compact(x, y)
        sampled += 1
        # W_r for r < 1 is not a basic set; degree test is the membership predicate
        if not (isinstance(z, Zero) or degree(z) >= r) or (r >= 1 and z not in W_r):
            witnesses.append({"sample": [x, y], "product": z})
    return CertReport(
        "compact.prop43",
        Status.FAIL if witnesses else Status.PASS,
        witnesses,
        {"case": case, **{k: params[k] for k in names}, "sample_size": sample_size},
        {"inclusion": label, "target_index": r, "clauses": verdicts, "sampled": sampled},
    )


def ideal_check(bound: int) -> CertReport:
    elems = window(bound)
    ideal = [t for t in elems if in_ideal(t)]
    bad = []
    for s, t in itertools.product(elems, ideal):
        for z in (mul_compact(s, t), mul_compact(t, s)):
            if not in_ideal(z):
                bad.append({"pair": [s, t], "product": z})
    return CertReport(
        "compact.ideal",
        Status.FAIL if bad else Status.PASS,
        bad[:5],
        {"bound": bound},
        {"pairs": 2 * len(elems) * len(ideal)},
    )


def quotient_check(bound: int) -> CertReport:
    """``rees_quotient`` is a surjective homomorphism onto ``S+_O / I0`` on the window."""
    elems = window(bound)
    bad = []
    for x, y in itertools.product(elems, repeat=2):
        lhs = rees_quotient(mul_compact(x, y))
        rhs = mul_quotient(rees_quotient(x), rees_quotient(y))
        if lhs != rhs:
            bad.append({"pair": [x, y], "q(xy)": lhs, "q(x)q(y)": rhs})
    image = {rees_quotient(x) for x in elems}
    expected = {x for x in elems if not in_ideal(x)} | {ZERO}
    if image != expected:
        bad.append({"image_mismatch": sorted(image ^ expected, key=str)})
    return CertReport("compact.quotient", Status.FAIL if bad else Status.PASS, bad[:5], {"bound": bound}, {"image": len(image)})


def density_witness(center: CompactElem, p: int) -> C:
    """An explicit ``C_Z+`` point in the basic neighbourhood of ``center``."""
    if isinstance(center, C):
        return center
    if isinstance(center, G1):
        return C(-p, -p + center.n)
    if isinstance(center, G0):
        return C(p, p + center.m)
    return C(0, p)


def density_check(p_max: int, payload_max: int | None = None) -> CertReport:
    payload_max = p_max if payload_max is None else payload_max
    centers: list[CompactElem] = [ZERO]
    centers += [G1(n) for n in range(payload_max + 1)]
    centers += [G0(m) for m in range(payload_max + 1)]
    centers += [C(0, 0), C(-1, 2), C(3, 3)]
    bad = []
    checked = 0
    for center, p in itertools.product(centers, range(1, p_max + 1)):
        w = density_witness(center, p)
        checked += 1
        if not (w.i <= w.j and nbhd_contains(nbhd_compact(center, p), w)):
            bad.append({"center": center, "p": p, "point": w})
    return CertReport(
        "compact.density",
        Status.FAIL if bad else Status.PASS,
        bad[:5],
        {"p_max": p_max, "payload_max": payload_max},
        {"checked": checked},
    )


def associativity_check(bound: int) -> CertReport:
    elems = window(bound)
    bad = []
    for x, y, z in itertools.product(elems, repeat=3):
        if mul_compact(mul_compact(x, y), z) != mul_compact(x, mul_compact(y, z)):
            bad.append([x, y, z])
            break
    return CertReport("compact.assoc", Status.FAIL if bad else Status.PASS, bad, {"bound": bound}, {"triples": len(elems) ** 3})


def prop43_all(max_param: int = 15, sample_size: int = 100) -> CertReport:
    """Every case for every parameter choice up to ``max_param``."""
    parts = []
    rng = range(max_param + 1)
    pos = range(1, max_param + 1)
    grids = {
        1: [dict(n=n, p1=a, p2=b) for n in rng for a in pos for b in pos],
        2: [dict(n=n, p1=a, p2=b) for n in rng for a in pos for b in pos],
        3: [dict(i=i, j=j, p=p) for i in range(-max_param, max_param + 1) for j in range(i, max_param + 1) for p in pos],
        5: [dict(m=m, p1=a, p2=b) for m in rng for a in pos for b in pos],
        6: [dict(m=m, p1=a, p2=b) for m in rng for a in pos for b in pos],
        7: [dict(p1=a, p2=b) for a in pos for b in pos],
    }
    grids[4] = grids[3]
    for case in sorted(grids):
        for params in grids[case]:
            parts.append(prop43_check(case, params, sample_size))
    return combine("compact.prop43.all", parts, {"max_param": max_param, "sample_size": sample_size})
