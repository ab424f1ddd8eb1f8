import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmalg.boolalg import BooleanHom, FiniteBooleanAlgebra, Ideal, all_ideals, hom_from_atom_map, validate_hom
from lmalg.construct import BoolIArrow, IdealSequenceObject, sample_object_arrows, symmetric_sequences
from lmalg.errors import InvariantError
from lmalg.stone import (
    FiniteSpaceWithOpens,
    SpaceMorphism,
    check_stone_roundtrip,
    clopen_algebra,
    dual_morphism,
    ideal_of_open,
    n_of_ideal,
    sample_space_arrows,
    spaces,
    spectrum,
    theta_a,
    theta_t,
    validate_space_morphism,
)

P = FiniteBooleanAlgebra(("p",))
PQ = FiniteBooleanAlgebra(("p", "q"))


def algebra(k):
    return FiniteBooleanAlgebra("pqrs"[:k])


def test_spectrum_examples():
    assert spectrum(P).space.point_count == 1
    sp = spectrum(PQ)
    assert sp.space.point_count == 2
    assert sp.n_of_element(PQ.element("p")) == 0b01
    for k in (1, 2, 3):
        s = spectrum(algebra(k))
        assert s.n_of_element(0) == 0 and s.n_of_element(algebra(k).top) == (1 << k) - 1
    with pytest.raises(InvariantError):
        spectrum(algebra(0))


def test_clopen_algebra():
    assert clopen_algebra(FiniteSpaceWithOpens((), 1, ())).size == 1
    assert clopen_algebra(FiniteSpaceWithOpens(("x", "y"), 1, ())).size == 4
    B = algebra(3)
    sp = spectrum(B)
    h = BooleanHom(B, clopen_algebra(sp.space), tuple(sp.n_of_element(b) for b in B.elements()))
    assert h.is_bijective() and validate_hom(h).passed


def test_n_of_ideal_examples():
    assert n_of_ideal(PQ, Ideal(PQ, 0)) == 0
    assert n_of_ideal(PQ, Ideal(PQ, 3)) == 3
    assert n_of_ideal(PQ, Ideal(PQ, 1)) == 1


@pytest.mark.parametrize("k", range(1, 5))
def test_membership_equivalence(k):
    B = algebra(k)
    sp = spectrum(B)
    for I in all_ideals(B):
        NI = n_of_ideal(B, I)
        # union of N_a equals the set of ultrafilters meeting I
        assert NI == sum(1 << p for p, U in enumerate(sp.points) if any(a in U for a in I.members()))
        for b in B.elements():
            assert (b in I) == (sp.n_of_element(b) & ~NI == 0)


def test_ideal_of_open_examples():
    X = FiniteSpaceWithOpens(("x1", "x2"), 1, ())
    assert ideal_of_open(X, 0).generator == 0
    assert ideal_of_open(X, 3).generator == 3
    assert set(ideal_of_open(X, 1).members()) == {0, 1}


def test_theta_examples():
    obj = IdealSequenceObject(PQ, 3, (0, 0))
    assert theta_a(obj).opens == (0, 0)
    obj = IdealSequenceObject(PQ, 3, (3, 3))
    assert theta_a(obj).opens == (3, 3)
    obj = IdealSequenceObject(PQ, 3, (1, 1))
    X = theta_a(obj)
    assert X.opens == (1, 1)
    assert theta_t(FiniteSpaceWithOpens(("x1", "x2"), 3, (0, 0))).generators == (0, 0)
    Y = FiniteSpaceWithOpens(("x1", "x2"), 3, (1, 1))
    assert theta_t(Y).generators == (1, 1)
    assert theta_t(X).generators == obj.generators


def test_asymmetric_opens_rejected():
    with pytest.raises(InvariantError):
        FiniteSpaceWithOpens(("x", "y"), 3, (1, 0))


def test_dual_identity_and_collapse():
    obj = IdealSequenceObject(PQ, 2, (0,))
    ident = BoolIArrow(obj, obj, BooleanHom.identity(PQ))
    f = dual_morphism("A", ident)
    assert f.table == (0, 1)
    tgt = IdealSequenceObject(P, 2, (0,))
    collapse = BoolIArrow(obj, tgt, hom_from_atom_map(PQ, P, [1]))
    f = dual_morphism("A", collapse)
    assert f.source.point_count == 1 and f.target.point_count == 2
    # the single ultrafilter of the target pulls back to the ultrafilter at q
    assert f.table == (1,)
    assert validate_space_morphism(f).passed


def test_dual_rejects_invalid_arrow():
    src = IdealSequenceObject(PQ, 3, (1, 1))
    tgt = IdealSequenceObject(PQ, 3, (0, 0))
    with pytest.raises(InvariantError):
        dual_morphism("A", BoolIArrow(src, tgt, BooleanHom.identity(PQ)))
    X = FiniteSpaceWithOpens(("x",), 3, (0, 0))
    Y = FiniteSpaceWithOpens(("y",), 3, (1, 1))
    with pytest.raises(InvariantError):
        dual_morphism("T", SpaceMorphism(X, Y, (0,)))


@pytest.mark.parametrize("gens", [(0, 0, 0), (1, 3, 1), (3, 2, 3), (3, 3, 3)])
def test_roundtrip_passes_n4(gens):
    assert check_stone_roundtrip(IdealSequenceObject(PQ, 4, gens)).passed


@pytest.mark.parametrize("k,n", [(1, 5), (2, 3), (3, 2)])
def test_roundtrip_all_objects_and_spaces(k, n):
    for obj in symmetric_sequences(algebra(k), n):
        assert check_stone_roundtrip(obj).passed
    for X in spaces(k, n):
        assert check_stone_roundtrip(X).passed


def test_contravariance_exercised():
    obj = IdealSequenceObject(algebra(3), 4, (1, 3, 1))
    r = check_stone_roundtrip(obj, seed=2)
    assert any(x.law.startswith("contravariant") for x in r.results)


@given(st.integers(0, 50), st.integers(1, 3), st.integers(2, 5))
def test_contravariance_on_random_chains(seed, k, n):
    objs = symmetric_sequences(algebra(k), n)
    obj = objs[seed % len(objs)]
    g1 = sample_object_arrows(obj, 1, seed)[-1]
    g2 = sample_object_arrows(g1.target, 1, seed + 1)[-1]
    lhs = dual_morphism("A", g2.compose(g1))
    rhs = dual_morphism("A", g1).compose(dual_morphism("A", g2))
    assert lhs.table == rhs.table


@given(st.integers(0, 50), st.integers(1, 3), st.integers(2, 5))
def test_space_arrows_dualize(seed, k, n):
    Xs = spaces(k, n)
    X = Xs[seed % len(Xs)]
    for f in sample_space_arrows(X, 2, seed):
        assert validate_space_morphism(f).passed
        twice = dual_morphism("A", dual_morphism("T", f))
        assert twice.source.point_count == f.source.point_count
        assert twice.target.point_count == f.target.point_count


def test_space_count():
    # symmetric families: one free open per pair {i, n-i}
    for k, n in itertools.product(range(1, 4), range(1, 6)):
        assert sum(1 for X in spaces(k, n) if X.point_count == k) == (1 << k) ** (n // 2)
