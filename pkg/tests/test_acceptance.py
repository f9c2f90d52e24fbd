"""Acceptance criteria, one test per criterion.

Each test records its verdict in the conftest registry; the terminal summary
prints one PASS/FAIL line per criterion.  Run this file directly to get the
same lines without pytest.
"""

from __future__ import annotations

import math
import time

from bicyclic import compact, families, topology
from bicyclic.core import B, Box, Domain, Z, mul, mul_oracle
from bicyclic.discreteness import certify, certify_element
from bicyclic.families import cplus, cplus_kx, cz_plus, cz_plus_kx, evens, odds
from bicyclic.topology import BasicNbhd, Side

try:
    from conftest import record
except ImportError:  # pragma: no cover
    def record(n, ok, summary=""):
        return ok


def test_c01_oracle_equivalence():
    pts = list(Box.square(0, 8).points(Domain.BOMEGA))
    start = time.perf_counter()
    bad = [(x, y) for x in pts for y in pts if mul(x, y) != mul_oracle(x, y)]
    elapsed = time.perf_counter() - start
    ok = record(1, not bad and len(pts) ** 2 == 81**2 and elapsed < 1.0,
                f"{len(pts) ** 2} pairs, {len(bad)} mismatches, {elapsed:.2f}s (< 1s)")
    assert ok, (bad[:3], elapsed)


def test_c02_associativity():
    pts = list(Box.square(-4, 4).points(Domain.CZ))
    start = time.perf_counter()
    bad = 0
    for x in pts:
        for y in pts:
            xy = mul(x, y)
            for z in pts:
                if mul(xy, z) != mul(x, mul(y, z)):
                    bad += 1
    t_cz = time.perf_counter() - start
    start = time.perf_counter()
    rep = compact.associativity_check(3)
    t_compact = time.perf_counter() - start
    ok = record(2, bad == 0 and t_cz < 30 and rep.passed and t_compact < 30,
                f"CZ {len(pts) ** 3} triples {t_cz:.1f}s; compact window {rep.details.get('triples')} triples {t_compact:.1f}s")
    assert ok, (bad, t_cz, rep.witnesses[:1], t_compact)


def test_c03_solution_count_lemma():
    bad = []
    for i in range(31):
        sols = families.solution_count(cplus(), B(i, i), B(i, i + 1))
        expected = {B(t, t + 1) for t in range(i + 1)}
        if sols.count != i + 1 or set(sols.solutions) != expected:
            bad.append(i)
    ok = record(3, not bad, f"i in 0..30, failures {bad}")
    assert ok


def test_c04_left_translate_closed_form():
    R = range(11)
    cache: dict = {}
    bad, checked = [], 0
    for p in (2, 3, 5):
        for n in range(4):
            for i2 in R:
                for j2 in R:
                    U = BasicNbhd(B(i2, j2), p, n, Side.R)
                    members = topology.nbhd_enumerate(U, 50)
                    for i1 in R:
                        for j1 in R:
                            s = B(i1, j1)
                            V = topology.left_translate_nbhd(s, U)
                            key = (V.base, V.step)
                            if key not in cache:
                                cache[key] = topology.nbhd_enumerate(V, 50)
                            checked += 1
                            if [mul(s, u) for u in members] != cache[key]:
                                bad.append((s, U))
    ok = record(4, not bad, f"{checked} (s, U) cases x 50 members, {len(bad)} mismatches")
    assert ok, bad[:3]


def test_c05_left_discontinuity_witness():
    bad, found, worst = [], 0, 0
    for p in (2, 3):
        for n in range(4):
            for i2 in range(1, 9):
                for j1 in range(i2):
                    for i1 in range(9):
                        for j2 in range(9):
                            x, y = B(i1, j1), B(i2, j2)
                            ceiling = math.ceil((i2 - j1) / p**n)
                            for m in range(6):
                                v = topology.left_discontinuity_witness(x, y, p, n, m)
                                target = BasicNbhd(mul(x, y), p, m, Side.R)
                                u = BasicNbhd(x, p, n, Side.R).member(v.witness_k)
                                ok = (
                                    not v.continuous
                                    and v.witness_k <= ceiling + 1
                                    and mul(u, y) == v.escaped
                                    and not topology.nbhd_contains(target, v.escaped)
                                )
                                if ok:
                                    found += 1
                                    worst = max(worst, v.witness_k - ceiling)
                                else:
                                    bad.append((x, y, p, n, m, v))
    ok = record(5, not bad, f"{found} witnesses re-verified, max k - ceiling = {worst}")
    assert ok, bad[:3]


def _brute_complement(F, e, window, big):
    image = {mul(s, e) for s in families.enumerate_window(F, big)}
    return [y for y in families.enumerate_window(F, window) if y not in image]


def test_c06_discreteness_certificates():
    F = cplus_kx(1, evens())
    certs = certify(F, Box.square(0, 12))
    bad = []
    for c in certs:
        q = c.idempotent.first
        brute = _brute_complement(F, c.idempotent, Box.square(0, q + 3), Box.square(0, 2 * q + 6))
        if not c.finite or list(c.complement) != brute or c.element not in c.complement:
            bad.append(c.element)
    G = cz_plus_kx(1, evens())
    negatives = [Z(-i, -i) for i in range(1, 13)]
    infinite = [s for s in negatives if not certify_element(G, s).finite]
    ok = record(6, certs and not bad and infinite == negatives,
                f"{len(certs)} finite certificates, {len(bad)} mismatches; {len(infinite)}/{len(negatives)} diagonal-negative infinite outcomes")
    assert ok, bad[:3]


def test_c07_prop43():
    rep = compact.prop43_all(max_param=15, sample_size=100)
    ok = record(7, rep.passed, f"{len(rep.details['parts'])} (case, params) instances, status {rep.status.value}")
    assert ok, rep.witnesses[:3]


def test_c08_density():
    rep = compact.density_check(50)
    F = cz_plus()
    bad = []
    centers = 0
    for p in range(1, 51):
        for payload in range(0, 51):
            for center in (compact.G1(payload), compact.G0(payload)):
                centers += 1
                w = compact.density_witness(center, p)
                N = compact.nbhd_compact(center, p)
                if not (compact.nbhd_contains(N, w) and F.contains(w.elem())):
                    bad.append((center, p))
        w = compact.density_witness(compact.ZERO, p)
        if not (compact.nbhd_contains(compact.nbhd_compact(compact.ZERO, p), w) and F.contains(w.elem())):
            bad.append(("zero", p))
        c = compact.C(-p, p)
        if compact.density_witness(c, p) != c:
            bad.append((c, p))
    ok = record(8, rep.passed and not bad, f"p <= 50, {centers + 100} centers re-verified, {len(bad)} failures")
    assert ok, bad[:3]


def test_c09_counterexample_fidelity():
    bad = []
    for i0 in range(-5, 6):
        x = Z(i0, i0 - 1)
        if mul(x, x) != Z(i0 + 1, i0 - 1):
            bad.append(("product", i0))
        L = families.l_tilde(i0)
        rep = families.check_closure(L, Box.square(-8, 8))
        if rep.passed or list(rep.witnesses[0]) != [x, x] or L.contains(mul(x, x)):
            bad.append(("closure", i0))
    ok = record(9, not bad, f"i0 in -5..5, failures {bad}")
    assert ok


def test_c10_classification():
    v1 = families.iso_classify(evens(), odds(), 100)
    v2 = families.iso_classify(evens(), evens().with_value(5, 11), 100)
    v3 = families.iso_classify(evens(), evens(), 100)
    ok = record(
        10,
        (not v1.identical and v1.index == 0 and not v2.identical and v2.index == 5
         and v3.identical and v3.depth == 100),
        f"{v1}; {v2}; {v3}",
    )
    assert ok


def test_c11_example_37():
    reps = [topology.ex37_check(p, 3, Box.square(-8, 8), kl_max=8) for p in (2, 3)]
    ok = record(11, all(r.passed for r in reps), ", ".join(f"p={p} {r.status.value}" for p, r in zip((2, 3), reps)))
    assert ok, [r.witnesses[:1] for r in reps]


def test_c12_bp_axioms():
    reps = []
    for side in (Side.R, Side.L):
        for p in (2, 3):
            reps.append(((side.value, p, "BOmega"), topology.bp_axioms_check(Domain.BOMEGA, p, side, Box.square(0, 12), 3)))
            reps.append(((side.value, p, "CZ"), topology.bp_axioms_check(Domain.CZ, p, side, Box.square(-6, 6), 3)))
    failed = [k for k, r in reps if not r.passed]
    ok = record(12, not failed, f"{len(reps)} (side, p, domain) runs, failed {failed}")
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            n = int(name[6:8])
            try:
                fn()
                print(f"criterion {n:2d}: PASS")
            except AssertionError as exc:
                print(f"criterion {n:2d}: FAIL {exc}")
