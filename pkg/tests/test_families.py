import pytest
from hypothesis import given, strategies as st

from bicyclic.core import B, Box, Domain, DomainError, Z, anti_iso, mul, nat_leq
from bicyclic.families import (
    BoundTooSmall, Family, IndexOutOfRange, IndexSet, Kind, check_closure, cminus_kx, cplus, cplus_k,
    cplus_kx, cz_minus, cz_plus, cz_plus_kx, cz_plus_shift, enumerate_window, evens, ex37, h_k,
    h_k_inverse, iota, iso_classify, l_tilde, naturals, odds, parse_family, solution_count,
    solution_profile, squares,
)

from conftest import index_sets


def test_index_set_canonical():
    assert evens() == IndexSet((0,), (2, 2)) == IndexSet((), (0, 2))
    assert str(evens()).startswith("{0,2,4")
    assert squares().size == 16 and squares().at(15) == 225
    with pytest.raises(IndexOutOfRange):
        squares().at(16)
    with pytest.raises(ValueError):
        IndexSet((3, 1))
    with pytest.raises(ValueError):
        IndexSet((0, 4), (4, 1))


@given(index_sets())
def test_index_set_roundtrip_and_order(X):
    assert IndexSet.from_json(X.to_json()) == X
    vals = X.take(12)
    assert all(a < b for a, b in zip(vals, vals[1:]))
    for i, v in enumerate(vals):
        assert v in X and X.index(v) == i


def test_contains_examples():
    F = cplus_kx(1, evens())
    assert not F.contains(B(3, 3)) and F.contains(B(4, 4))
    assert cplus().contains(B(2, 2))
    assert not ex37().contains(Z(0, -1))
    with pytest.raises(DomainError):
        cplus().contains(Z(0, 1))


def test_enumerate_examples():
    assert enumerate_window(cplus_k(2), Box.square(0, 3)) == [B(0, 2), B(0, 3), B(1, 3)]
    assert enumerate_window(cplus(), Box(1, 0, 1, 0)) == []
    assert enumerate_window(cz_plus_shift(-1), Box.square(-1, 0)) == [Z(-1, -1), Z(-1, 0), Z(0, 0)]


FAMILIES = [
    cplus(), Family(Kind.CMINUS), cplus_k(2), cplus_kx(1, evens()), cplus_kx(3, odds()), cminus_kx(2, evens()),
    cz_plus(), cz_minus(), cz_plus_shift(-2), cz_plus_shift(3), cz_plus_kx(1, evens()), cz_plus_kx(2, squares()), ex37(),
]


@pytest.mark.parametrize("F", FAMILIES, ids=str)
def test_closure_on_windows(F):
    assert check_closure(F, Box.square(-10, 10)).passed


def test_closure_counterexample():
    rep = check_closure(l_tilde(0), Box.square(-4, 4))
    assert not rep.passed
    assert list(rep.witnesses[0]) == [Z(0, -1), Z(0, -1)]


@given(st.integers(1, 4), index_sets(), st.integers(0, 15), st.integers(0, 15))
def test_cpluskx_off_diagonal_is_cplusk(k, X, i, j):
    if i != j:
        assert cplus_kx(k, X).contains(B(i, j)) == cplus_k(k).contains(B(i, j))


def test_ai_maps_cpluskx_onto_cminuskx():
    F, G = cplus_kx(2, evens()), cminus_kx(2, evens())
    w = Box.square(0, 10)
    image = sorted(anti_iso(x) for x in enumerate_window(F, w))
    assert image == enumerate_window(G, w)
    members = enumerate_window(F, Box.square(0, 5))
    for x in members:
        for y in members:
            assert anti_iso(mul(x, y)) == mul(anti_iso(y), anti_iso(x))


def test_iota():
    assert iota(evens(), odds(), 3) == (6, 7)
    assert iota(evens(), evens(), 4) == (8, 8)
    assert iota(naturals(), squares(), 2) == (2, 4)


def test_h_k_examples():
    assert h_k(B(2, 5), -3) == Z(-1, 2)
    assert h_k(B(0, 0), 0) == Z(0, 0)
    x, y = B(1, 2), B(2, 4)
    assert h_k(mul(x, y), -2) == mul(h_k(x, -2), h_k(y, -2)) == Z(-1, 2)
    with pytest.raises(ValueError):
        h_k(B(3, 1), 0)


upper_pairs = st.tuples(st.integers(0, 15), st.integers(0, 15)).map(lambda t: B(min(t), max(t)))


@given(st.integers(-5, 5), upper_pairs, upper_pairs)
def test_h_k_properties(k, x, y):
    assert h_k_inverse(h_k(x, k), k) == x
    assert h_k(mul(x, y), k) == mul(h_k(x, k), h_k(y, k))
    assert nat_leq(x, y) == nat_leq(h_k(x, k), h_k(y, k))
    assert (x.first == x.second) == (h_k(x, k).first == h_k(x, k).second)


def test_h_k_onto_shifted_family():
    for k in (-3, 0, 2):
        F = cz_plus_shift(k)
        window = Box.square(k, k + 8)
        image = sorted(h_k(x, k) for x in enumerate_window(cplus(), Box.square(0, 8)))
        assert image == enumerate_window(F, window)


def test_solution_count_examples():
    s = solution_count(cplus(), B(2, 2), B(2, 3))
    assert s.count == 3 and set(s.solutions) == {B(0, 1), B(1, 2), B(2, 3)}
    assert solution_count(cplus(), B(0, 0), B(0, 1)).solutions == (B(0, 1),)
    assert solution_count(cplus_kx(1, evens()), B(4, 4), B(4, 5)).count == 5
    # brute force over box[0..6] agrees
    F = cplus_kx(1, evens())
    brute = [z for z in enumerate_window(F, Box.square(0, 6)) if mul(B(4, 4), z) == B(4, 5)]
    assert len(brute) == 5


def test_solution_count_bound_too_small():
    with pytest.raises(BoundTooSmall):
        solution_count(cplus(), B(5, 5), B(5, 6), Box.square(2, 6))
    assert solution_count(cplus(), B(2, 2), B(2, 3), Box.square(0, 6)).count == 3


def test_solution_profile():
    assert solution_profile(cplus_kx(1, evens()), 5) == [1, 3, 5, 7, 9]
    assert solution_profile(cplus_kx(1, squares()), 4) == [1, 2, 5, 10]


def test_iso_classify():
    v = iso_classify(evens(), odds(), 100)
    assert not v.identical and (v.index, v.x, v.y) == (0, 0, 1)
    assert iso_classify(evens(), evens(), 100).identical
    assert iso_classify(evens(), evens().with_value(5, 11), 100).index == 5


def test_parse_family():
    doc = {"kind": "cpluskx", "k": 1, "X": {"prefix": [0], "tail": {"start": 2, "step": 2}}}
    assert parse_family(doc) == cplus_kx(1, evens())
    assert parse_family({"kind": "cplus"}) == cplus()
    assert parse_family("cpluskx:1:evens") == cplus_kx(1, evens())
    assert parse_family(cz_plus_kx(2, odds()).to_json()) == cz_plus_kx(2, odds())
    for bad in ({"kind": "cpluskx", "k": 1, "X": {"prefix": [3, 1]}}, {"kind": "nope"}, "cpluskx", {"k": 1}):
        with pytest.raises(ValueError):
            parse_family(bad)


def test_domains():
    assert cplus().domain is Domain.BOMEGA and cz_plus().domain is Domain.CZ
