"""Finite-complement certificates for discreteness of left-continuous topologies.

For a member ``s`` of a family ``S`` we look for an idempotent ``e`` with
``s`` outside ``S e`` and ``S \\ S e`` finite.  Right translation by ``(q, q)``
never lowers the second coordinate below ``q``, which drives everything here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Box, Elem, is_idempotent, mul, nat_leq
from .families import Family, enumerate_window
from .report import CertReport, Status


class NoIdempotent(ValueError):
    pass


def find_isolating_idempotent(F: Family, s: Elem) -> Elem:
    """Least idempotent ``(q, q)`` of ``F`` with ``q > s.second``."""
    if not F.contains(s):
        raise ValueError(f"{s} is not in {F}")
    q = F.diagonal_next(s.second)
    if q is None:
        raise NoIdempotent(f"{F} has no representable idempotent above {s}")
    return Elem(q, q, F.domain)


def _check_idempotent(F: Family, e: Elem):
    if not is_idempotent(e) or not F.contains(e):
        raise ValueError(f"{e} is not an idempotent of {F}")


def right_preimage(F: Family, e: Elem, y: Elem) -> Elem | None:
    """Some ``z`` in ``F`` with ``z * e = y``, or None.

    With ``e = (q, q)``: second coordinates above ``q`` are fixed by ``e``,
    below ``q`` are unreachable, and at ``q`` the preimages are
    ``(y.first - q + t, t)`` with ``t <= q``.
    """
    _check_idempotent(F, e)
    q = e.first
    if y.second > q:
        return y if F.contains(y) else None
    if y.second < q:
        return None
    lo = F.floor if F.floor is not None else min(q, y.first) - 1
    for t in range(q, lo - 1, -1):
        s = y.first - q + t
        if F.floor is not None and s < F.floor:
            continue
        z = Elem(s, t, F.domain)
        if F.contains(z) and mul(z, e) == y:
            return z
    return None


def in_principal_right_set(F: Family, e: Elem, y: Elem) -> bool:
    """Whether ``y`` lies in ``F * e``."""
    return right_preimage(F, e, y) is not None


@dataclass(frozen=True)
class Complement:
    """``F \\ F e``: exact when ``finite``, otherwise a window sample."""

    idempotent: Elem
    finite: bool
    elements: tuple[Elem, ...]
    bound: Box

    def to_json(self) -> dict:
        return {
            "idempotent": self.idempotent.to_json(),
            "finite": self.finite,
            "elements": [x.to_json() for x in self.elements],
            "bound": self.bound.to_json(),
        }


def complement_is_finite(F: Family) -> bool:
    # members with second < q are finitely many iff first <= second and coordinates are bounded below
    return F.upper and F.floor is not None


def complement(F: Family, e: Elem, sample: Box | None = None) -> Complement:
    _check_idempotent(F, e)
    q = e.first
    if complement_is_finite(F):
        lo = F.floor
        bound = Box(lo, q - 1, lo, q - 1)
        finite = True
    else:
        bound = sample if sample is not None else Box(q - 8, q + 8, q - 8, q - 1)
        finite = False
    elems = tuple(y for y in enumerate_window(F, bound) if not in_principal_right_set(F, e, y))
    return Complement(e, finite, elems, bound)


@dataclass(frozen=True)
class DiscretenessCertificate:
    element: Elem
    idempotent: Elem
    complement: tuple[Elem, ...]
    complement_bound: Box
    finite: bool

    def to_json(self) -> dict:
        return {
            "element": self.element.to_json(),
            "idempotent": self.idempotent.to_json(),
            "complement": [x.to_json() for x in self.complement],
            "complement_bound": self.complement_bound.to_json(),
            "finite": self.finite,
        }


def certify_element(F: Family, s: Elem, sample: Box | None = None) -> DiscretenessCertificate:
    e = find_isolating_idempotent(F, s)
    comp = complement(F, e, sample)
    if comp.finite and s not in comp.elements:
        raise AssertionError(f"{s} missing from its own complement {comp.elements}")
    return DiscretenessCertificate(s, e, comp.elements, comp.bound, comp.finite)


def certify(F: Family, window: Box, sample: Box | None = None) -> list[DiscretenessCertificate]:
    """One certificate per member of ``F`` in ``window``, sorted by element."""
    return [certify_element(F, s, sample) for s in enumerate_window(F, window)]


def certify_report(F: Family, window: Box) -> CertReport:
    certs = certify(F, window)
    infinite = [c.element for c in certs if not c.finite]
    status = Status.INFINITE if infinite else Status.PASS
    return CertReport(
        "discrete.certify",
        status,
        [],
        {"family": F, "window": window},
        {"certificates": certs, "infinite": infinite, "count": len(certs)},
    )


def upset_equation_check(F: Family, n: int, i: int, j: int, window: Box) -> CertReport:
    """Check that the solutions of ``z * (n, n) = (n - j + i, n)`` in ``F``
    form the up-set of ``(n - j + i, n)``, i.e. ``{(n - j + i - p, n - p) : p >= 0}``,
    inside ``window``.
    """
    e = Elem(n, n, F.domain)
    x = Elem(i, j, F.domain)
    _check_idempotent(F, e)
    if not F.contains(x) or not j < n:
        raise ValueError(f"need ({i},{j}) in {F} with {j} < {n}")
    target = Elem(n - j + i, n, F.domain)
    members = enumerate_window(F, window)
    solutions = {z for z in members if mul(z, e) == target}
    upset = {z for z in members if nat_leq(target, z)}
    chain = set()
    for p in range(max(target.first - window.lo1, target.second - window.lo2, 0) + 1):
        s, t = target.first - p, target.second - p
        if F.floor is not None and min(s, t) < F.floor:
            break
        z = Elem(s, t, F.domain)
        if z in window and F.contains(z):
            chain.add(z)
    witnesses = []
    if mul(x, e) != target:
        witnesses.append({"product": [x, e], "got": mul(x, e), "expected": target})
    for name, other in (("upset", upset), ("chain", chain)):
        for z in sorted(solutions ^ other):
            witnesses.append({"mismatch": name, "element": z})
    if x in window and x not in upset:
        witnesses.append({"mismatch": "start", "element": x})
    return CertReport(
        "discrete.upset",
        Status.FAIL if witnesses else Status.PASS,
        witnesses,
        {"family": F, "n": n, "i": i, "j": j, "window": window},
        {"target": target, "solutions": sorted(solutions)},
    )
