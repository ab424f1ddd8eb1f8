import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmalg.boolalg import BooleanHom, FiniteBooleanAlgebra, hom_from_atom_map, validate_hom
from lmalg.construct import (
    BoolIArrow,
    DisjointTuple,
    IdealSequenceObject,
    MonotoneTuple,
    build_J,
    build_T,
    check_adjunction,
    check_cat_equivalence,
    check_j_closed_forms,
    epsilon,
    eta,
    kappa,
    lambda_functor,
    lambda_map,
    sample_lm_arrows,
    sigma_functor,
    symmetric_sequences,
    tuple_bijection,
    validate_arrow,
)
from lmalg.errors import InvariantError
from lmalg.lm import J_SYSTEM, L_SYSTEM, canonical, check_axioms, phi_to_j, validate_lm_hom

P = FiniteBooleanAlgebra(("p",))
PQ = FiniteBooleanAlgebra(("p", "q"))
PQR = FiniteBooleanAlgebra(("p", "q", "r"))


def brute_monotone(B, n):
    return [t for t in itertools.product(B.elements(), repeat=n) if all(B.leq(a, b) for a, b in zip(t, t[1:]))]


def brute_disjoint(B, n):
    return [t for t in itertools.product(B.elements(), repeat=n)
            if all(a & b == 0 for a, b in itertools.combinations(t, 2))]


@pytest.mark.parametrize("k,n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2)])
def test_carriers_match_brute_force(k, n):
    B = FiniteBooleanAlgebra("pqr"[:k])
    T, Jb = build_T(B, n), build_J(B, n)
    assert sorted(map(tuple, T.tuples.tolist())) == sorted(brute_monotone(B, n))
    assert sorted(map(tuple, Jb.tuples.tolist())) == sorted(brute_disjoint(B, n))
    assert T.size == Jb.size == (n + 1) ** k
    # lexicographic order makes indices reproducible
    assert list(map(tuple, T.tuples.tolist())) == sorted(map(tuple, T.tuples.tolist()))


def test_T_examples():
    T = build_T(P, 2)
    x = T.index_of((0, 1))
    assert T.tuple_at(T.algebra.op(1)[x]) == (0, 0)
    assert T.tuple_at(T.algebra.star[x]) == (0, 1)
    assert check_axioms(T.algebra, L_SYSTEM).passed


@pytest.mark.parametrize("n", range(1, 6))
def test_T_of_two_element_algebra_is_canonical(n):
    assert build_T(P, n).algebra.same_tables(canonical(n))


def test_J_examples():
    Jb = build_J(PQ, 2)
    p, q = 1, 2
    L = Jb.algebra
    ab, ba = Jb.index_of((p, q)), Jb.index_of((q, p))
    assert Jb.tuple_at(L.op(1)[ab]) == (q, 0)
    assert Jb.tuple_at(L.join[ab, ba]) == (3, 0)
    z = Jb.index_of((0, 0))
    assert z == L.zero
    assert all(L.op(i)[z] == z for i in range(1, 3))
    assert check_axioms(L, J_SYSTEM).passed


def test_J_closed_forms_and_star_discrepancy():
    r = check_j_closed_forms(build_J(PQ, 2))
    assert r.passed
    assert r.law("star_transported_form").passed
    assert not r.law("star_printed_involution").passed
    assert not r.law("star_printed_form").passed
    # by hand through T(B): f(p,q) = (p,1), its T-star is (~1,~p) = (0,q), and g(0,q) = (0,q)
    Jb = build_J(PQ, 2)
    assert Jb.tuple_at(Jb.algebra.star[Jb.index_of((1, 2))]) == (0, 2)
    # the printed form would give (0, ~q) = (0,p), and applying it again gives (q,q), not disjoint
    assert Jb.tuple_at(Jb.algebra.star[Jb.index_of((0, 2))]) == (1, 2)


def test_tuple_bijection_examples():
    a, b = 1, 2
    assert tuple_bijection("F", DisjointTuple(PQ, (a, b))).entries == (a, 3)
    assert tuple_bijection("G", MonotoneTuple(PQ, (a, 3))).entries == (a, b)
    assert tuple_bijection("F", DisjointTuple(PQ, (0, 0, 0))).entries == (0, 0, 0)
    with pytest.raises(InvariantError):
        MonotoneTuple(PQ, (3, 1))
    with pytest.raises(InvariantError):
        DisjointTuple(PQ, (1, 3))
    with pytest.raises(InvariantError):
        tuple_bijection("F", MonotoneTuple(PQ, (1, 3)))


@given(st.integers(1, 4), st.lists(st.integers(0, 15), min_size=1, max_size=5))
def test_fg_mutually_inverse(k, raw):
    B = FiniteBooleanAlgebra("pqrs"[:k])
    # force monotone by prefix joins of arbitrary elements
    acc, xs = 0, []
    for v in raw:
        acc |= v & B.top
        xs.append(acc)
    t = MonotoneTuple(B, tuple(xs))
    assert tuple_bijection("F", tuple_bijection("G", t)) == t


def test_eta_examples():
    L = canonical(3)
    h = eta(L)
    T = build_T(FiniteBooleanAlgebra(("e1",)), 3)
    assert h.target.size == 4
    # nuance tuple of 1/3 in center coordinates
    assert T.tuple_at(h(1)) == (0, 0, 1)
    assert T.tuple_at(h(0)) == (0, 0, 0)
    TB = build_T(PQ, 2)
    assert eta(TB.algebra).is_bijective()


def test_epsilon_examples():
    e = epsilon(PQ, 3)
    assert e.is_bijective() and validate_hom(e).passed
    assert e(0) == 0
    # the center of T(B) is the constant tuples; epsilon reads the first coordinate
    T = build_T(PQ, 3)
    consts = sorted(e.table)
    assert consts == [0, 1, 2, 3]
    assert {T.tuple_at(T.index_of((b,) * 3))[0] for b in PQ.elements()} == set(consts)


@pytest.mark.parametrize("make", [lambda: canonical(3), lambda: build_T(PQ, 3).algebra,
                                  lambda: build_J(PQR, 2).algebra])
def test_adjunction(make):
    r = check_adjunction(make())
    assert r.passed, r.summary()


def test_lambda_examples():
    obj = lambda_functor(phi_to_j(canonical(3)))
    assert obj.base.size == 2 and obj.generators == (1, 1)
    assert lambda_functor(phi_to_j(canonical(1))).generators == ()
    obj = lambda_functor(build_J(P, 4).algebra)
    assert obj.generators == (1, 1, 1)


def sigma_size_oracle(obj):
    """Per-atom count: an atom can be absent, in y_1, or in any y_i whose ideal contains it."""
    out = 1
    for a in range(obj.base.atom_count):
        out *= 2 + sum(1 for v in range(1, obj.n) if obj.gen(v) >> a & 1)
    return out


def test_sigma_examples():
    obj = IdealSequenceObject(PQ, 2, (1,))
    S = sigma_functor(obj)
    assert S.size == 6
    assert {t[1] for t in map(tuple, S.tuples.tolist())} == {0, 1}
    full = IdealSequenceObject(PQ, 3, (3, 3))
    assert sigma_functor(full).size == 16
    zero = IdealSequenceObject(PQ, 4, (0, 0, 0))
    S = sigma_functor(zero)
    assert S.size == 4 and all(t[1:] == [0, 0, 0] for t in S.tuples.tolist())
    with pytest.raises(InvariantError):
        IdealSequenceObject(PQ, 3, (1, 0))


@pytest.mark.parametrize("k,n", [(1, 3), (2, 2), (2, 4), (3, 3)])
def test_sigma_size_and_round_trip(k, n):
    B = FiniteBooleanAlgebra("pqr"[:k])
    for obj in symmetric_sequences(B, n):
        S = sigma_functor(obj)
        assert S.size == sigma_size_oracle(obj)
        back = lambda_functor(S.algebra)
        assert back.generators == obj.generators  # base_iso is the identity on codes here


@pytest.mark.parametrize("make", [lambda: phi_to_j(canonical(4)), lambda: build_J(PQ, 3).algebra])
def test_cat_equivalence_passes(make):
    L = make()
    assert check_cat_equivalence(L, lambda_functor(L)).passed


def test_cat_equivalence_zero_ideals():
    obj = IdealSequenceObject(PQ, 3, (0, 0))
    L = sigma_functor(obj).algebra
    r = check_cat_equivalence(L, obj)
    assert r.passed


def test_kappa_formula():
    L = build_J(PQ, 3).algebra
    k = kappa(L)
    assert k.is_bijective() and validate_lm_hom(k).passed


def test_lambda_functorial_on_sampled_arrows():
    L = build_J(PQR, 2).algebra
    for f in sample_lm_arrows(L, 4, seed=3):
        assert validate_lm_hom(f).passed
        assert validate_arrow(lambda_map(f)).passed


def test_invalid_arrow_detected():
    src = IdealSequenceObject(PQ, 3, (1, 1))
    tgt = IdealSequenceObject(PQ, 3, (0, 0))
    a = BoolIArrow(src, tgt, BooleanHom.identity(PQ))
    r = validate_arrow(a)
    assert not r.passed and r.first_failure.law == "ideal_1"
    ok = BoolIArrow(src, IdealSequenceObject(P, 3, (1, 1)), hom_from_atom_map(PQ, P, [0]))
    assert validate_arrow(ok).passed


def test_sigma_is_sub_of_J():
    obj = IdealSequenceObject(PQR, 4, (1, 5, 1))
    S, Jb = sigma_functor(obj), build_J(PQR, 4)
    rows = {tuple(r) for r in Jb.tuples.tolist()}
    assert all(tuple(r) in rows for r in S.tuples.tolist())
    assert np.all(S.tuples[:, 1:] & ~np.array([obj.gen(3), obj.gen(2), obj.gen(1)]) == 0)
