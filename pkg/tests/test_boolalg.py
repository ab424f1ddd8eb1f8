import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmalg.boolalg import (
    BooleanHom,
    FiniteBooleanAlgebra,
    Ideal,
    Ultrafilter,
    all_ideals,
    check_ideal,
    hom_from_atom_map,
    ideal_from_set,
    mk_powerset_algebra,
    submasks,
    ultrafilter_hom,
    ultrafilters,
    validate_hom,
)
from lmalg.errors import BoundError, InvariantError


def algebra(k):
    return FiniteBooleanAlgebra(tuple("pqrstu"[:k]))


@st.composite
def algebra_and_elements(draw, count=2, max_atoms=5):
    k = draw(st.integers(0, max_atoms))
    B = algebra(k)
    return (B, *[draw(st.integers(0, B.top)) for _ in range(count)])


def test_two_atom_encoding():
    B = mk_powerset_algebra(["p", "q"])
    assert B.size == 4 and B.top == 3
    p, q = B.element(["p"]), B.element(["q"])
    assert (p, q) == (1, 2)
    assert B.join(p, q) == B.top
    assert B.meet(p, q) == 0
    assert B.complement(p) == q
    assert B.render(p) == "p" and B.render(3) == "1" and B.render(0) == "0"


def test_duplicate_atoms_rejected():
    with pytest.raises(InvariantError):
        FiniteBooleanAlgebra(("p", "p"))


def test_bound():
    with pytest.raises(BoundError):
        mk_powerset_algebra(list("abcde"), max_atoms=4)


@given(algebra_and_elements(3))
def test_boolean_laws(data):
    B, a, b, c = data
    assert B.join(a, B.meet(b, c)) == B.meet(B.join(a, b), B.join(a, c))
    assert B.complement(B.complement(a)) == a
    assert B.join(a, B.complement(a)) == B.top
    assert B.meet(a, B.complement(a)) == 0
    assert B.complement(B.join(a, b)) == B.meet(B.complement(a), B.complement(b))
    assert B.leq(a, b) == (B.meet(a, b) == a)


def test_submasks_enumerates_principal_ideal():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert list(submasks(0)) == [0]


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_ideals_are_principal(k):
    # every down-closed, join-closed set containing 0 is the down-set of its join
    B = algebra(k)
    ideals = set()
    for bits in range(1, 1 << B.size):
        S = [e for e in B.elements() if bits >> e & 1]
        if check_ideal(B, S).passed:
            ideals.add(frozenset(S))
    assert len(ideals) == B.size
    assert ideals == {frozenset(Ideal(B, g).members()) for g in B.elements()}


def test_check_ideal_witnesses():
    B = algebra(2)
    r = check_ideal(B, [0, 1, 2])
    assert not r.passed and r.first_failure.law == "join_closed"
    assert r.first_failure.witness == (1, 2)
    r = check_ideal(B, [0, 3])
    assert r.first_failure.law == "down_closed"
    r = check_ideal(B, [1])
    assert r.first_failure.law == "zero"
    assert check_ideal(B, [0, 1]).info["generator"] == 1
    with pytest.raises(InvariantError):
        ideal_from_set(B, [0, 1, 2])


def test_ideal_membership_matches_generator():
    B = algebra(3)
    for I in all_ideals(B):
        assert {b for b in B.elements() if b in I} == set(I.members())
        assert len(I) == len(I.members())


def test_ultrafilters():
    B = algebra(3)
    us = ultrafilters(B)
    assert [U.atom for U in us] == [1, 2, 4]
    for U in us:
        # prime and proper
        assert 0 not in U and B.top in U
        for a, b in itertools.product(B.elements(), repeat=2):
            assert (B.join(a, b) in U) == (a in U or b in U)
        assert validate_hom(ultrafilter_hom(U)).passed
    with pytest.raises(InvariantError):
        ultrafilters(algebra(0))
    with pytest.raises(InvariantError):
        Ultrafilter(B, 3)


def test_validate_hom_detects_bad_maps():
    B = algebra(2)
    assert validate_hom(BooleanHom.identity(B)).passed
    bad = BooleanHom(B, B, (0, 1, 1, 3))
    r = validate_hom(bad)
    assert not r.passed
    assert r.first_failure.law in ("join", "complement")


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_atom_maps_give_homs(ka, kb, data):
    A, B = algebra(ka), algebra(kb)
    m = data.draw(st.lists(st.integers(0, ka - 1), min_size=kb, max_size=kb))
    h = hom_from_atom_map(A, B, m)
    assert validate_hom(h).passed
    back = hom_from_atom_map(B, A, [0] * ka)
    assert validate_hom(back.compose(h)).passed


def test_inverse():
    B = algebra(2)
    swap = hom_from_atom_map(B, B, [1, 0])
    assert swap.is_bijective()
    assert swap.inverse().compose(swap) == BooleanHom.identity(B)
