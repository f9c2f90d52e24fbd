import pytest
from hypothesis import given, strategies as st

from bicyclic.core import B, Box, Domain, Z, anti_iso, mul
from bicyclic.families import cplus_kx, evens
from bicyclic.topology import (
    BasicNbhd, Side, bp_axioms_check, escape_ceiling, ex37_check, induced_exponent, induced_nbhd_check,
    is_prime, left_discontinuity_witness, left_translate_nbhd, nbhd_contains, nbhd_enumerate,
    right_continuity_check, right_translate_nbhd, separation_exponent,
)

from conftest import bomega, cz

primes = st.sampled_from([2, 3, 5, 7])


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        BasicNbhd(B(0, 0), 4, 1, Side.R)


def test_membership_examples():
    U = BasicNbhd(B(2, 3), 2, 1, Side.R)
    assert nbhd_contains(U, B(2, 7))
    assert nbhd_contains(U, B(2, 3))
    assert not nbhd_contains(U, B(2, 4))
    assert not nbhd_contains(U, B(3, 7))


def test_enumerate_examples():
    assert nbhd_enumerate(BasicNbhd(B(0, 0), 2, 0, Side.R), 3) == [B(0, 0), B(0, 1), B(0, 2)]
    assert nbhd_enumerate(BasicNbhd(B(5, 5), 3, 2, Side.R), 0) == []
    assert nbhd_enumerate(BasicNbhd(B(1, 1), 3, 2, Side.R), 2) == [B(1, 1), B(1, 10)]
    assert nbhd_enumerate(BasicNbhd(B(1, 1), 3, 2, Side.L), 2) == [B(1, 1), B(10, 1)]


@given(cz(), cz(), primes, st.integers(0, 3))
def test_ai_transport(x, y, p, n):
    L = BasicNbhd(x, p, n, Side.L)
    R = BasicNbhd(anti_iso(x), p, n, Side.R)
    assert nbhd_contains(L, y) == nbhd_contains(R, anti_iso(y))
    assert len(set(nbhd_enumerate(L, 2))) == 2


def test_translate_examples():
    U = BasicNbhd(B(2, 3), 2, 1, Side.R)
    assert left_translate_nbhd(B(1, 0), U) == BasicNbhd(B(3, 3), 2, 1, Side.R)
    assert left_translate_nbhd(B(0, 0), U) == U
    assert left_translate_nbhd(B(1, 5), U) == BasicNbhd(B(1, 6), 2, 1, Side.R)
    with pytest.raises(ValueError):
        left_translate_nbhd(B(0, 0), U.mirror())


@given(cz(), cz(), primes, st.integers(0, 3))
def test_closed_forms_pointwise(s, x, p, n):
    U = BasicNbhd(x, p, n, Side.R)
    assert [mul(s, u) for u in nbhd_enumerate(U, 30)] == nbhd_enumerate(left_translate_nbhd(s, U), 30)
    V = BasicNbhd(x, p, n, Side.L)
    assert [mul(u, s) for u in nbhd_enumerate(V, 30)] == nbhd_enumerate(right_translate_nbhd(V, s), 30)


def test_right_continuity_examples():
    v = right_continuity_check(B(3, 1), B(1, 4), 2, 2)
    assert v.continuous and v.m == 2
    assert right_continuity_check(B(0, 0), B(4, 2), 3, 1).continuous
    v = right_continuity_check(B(0, 2), B(5, 5), 3, 1)
    assert v.continuous and v.m == 1


@given(bomega(), bomega(), primes, st.integers(0, 3), st.sampled_from(list(Side)))
def test_right_continuity_total(s, x, p, n, side):
    assert right_continuity_check(s, x, p, n, side, samples=20).continuous


def test_left_witness_examples():
    v = left_discontinuity_witness(B(0, 0), B(1, 1), 2, 1, 1)
    assert (v.witness_k, v.escaped) == (1, B(0, 2))
    assert not nbhd_contains(BasicNbhd(B(1, 1), 2, 1, Side.R), v.escaped)
    v = left_discontinuity_witness(B(0, 0), B(2, 2), 2, 0, 5)
    assert (v.witness_k, v.escaped) == (3, B(0, 3))
    assert escape_ceiling(B(0, 0), B(2, 2), 2, 0) == 2
    with pytest.raises(ValueError, match="no escape guaranteed"):
        left_discontinuity_witness(B(0, 3), B(2, 2), 2, 0, 1)


def test_left_witness_mirror_side():
    x, y = B(4, 1), B(0, 2)
    v = left_discontinuity_witness(x, y, 3, 1, 2, Side.L)
    u = BasicNbhd(y, 3, 1, Side.L).member(v.witness_k)
    assert mul(x, u) == v.escaped
    assert not nbhd_contains(BasicNbhd(mul(x, y), 3, 2, Side.L), v.escaped)


def test_witness_cap(monkeypatch):
    monkeypatch.setenv("BICYCLIC_WITNESS_CAP", "2")
    with pytest.raises(RuntimeError):
        left_discontinuity_witness(B(0, 0), B(2, 2), 2, 0, 5)


def test_separation():
    assert separation_exponent(B(1, 2), B(2, 2), 2) == 0
    n = separation_exponent(B(1, 2), B(1, 6), 2)
    U, V = BasicNbhd(B(1, 2), 2, n, Side.R), BasicNbhd(B(1, 6), 2, n, Side.R)
    assert not set(nbhd_enumerate(U, 40)) & set(nbhd_enumerate(V, 40))


@pytest.mark.parametrize("p,side", [(2, Side.R), (3, Side.L)])
def test_bp_examples(p, side):
    assert bp_axioms_check(Domain.BOMEGA, p, side, Box.square(0, 8), 3).passed


def test_induced_examples():
    F = cplus_kx(1, evens())
    assert induced_nbhd_check(F, B(0, 2), 2, 0).passed
    assert induced_nbhd_check(F, B(2, 2), 2, 0).passed
    rep = induced_nbhd_check(cplus_kx(2, evens()), B(2, 2), 2, 0)
    assert not rep.passed and rep.witnesses[0] == B(2, 3)
    assert induced_exponent(cplus_kx(2, evens()), B(2, 2), 2) == 1


def test_ex37_examples():
    assert mul(Z(-3, -3), Z(0, 5)) == Z(0, 5)
    assert mul(Z(0, 2), Z(0, 3)) == Z(0, 5)
    for p in (2, 3):
        for n in range(4):
            U = BasicNbhd(Z(0, 5), p, n, Side.R)
            assert nbhd_contains(U, mul(Z(0, 2 + p**n), Z(0, 3 + p**n)))
    assert ex37_check(2, 2, Box.square(-5, 5), kl_max=4).passed
