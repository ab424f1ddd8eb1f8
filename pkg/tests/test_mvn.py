import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmalg.boolalg import FiniteBooleanAlgebra
from lmalg.construct import IdealSequenceObject, build_J, lambda_functor, symmetric_sequences
from lmalg.errors import BoundError, PreconditionError
from lmalg.lm import canonical
from lmalg.mvn import (
    ODOT,
    POWER,
    SCALAR,
    check_l_proper,
    check_mv_axioms,
    check_mvn_axioms,
    check_somv_condition,
    mutate_mv,
    mv_chain,
    mv_term,
    mvn_exponents,
    proper_pairs,
)
from lmalg.stone import FiniteSpaceWithOpens, theta_a

PQ = FiniteBooleanAlgebra(("p", "q"))


def frac_ops(n):
    """Oracle on exact fractions."""
    v = [Fraction(i, n) for i in range(n + 1)]
    oplus = lambda a, b: min(Fraction(1), a + b)
    star = lambda a: 1 - a
    return v, oplus, star


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_matches_fraction_oracle(n):
    A = mv_chain(n)
    v, oplus, star = frac_ops(n)
    for x in range(n + 1):
        assert v[A.star[x]] == star(v[x])
        for y in range(n + 1):
            assert v[A.oplus[x, y]] == oplus(v[x], v[y])
            # odot oracle: max(0, x + y - 1)
            assert v[A.odot[x, y]] == max(Fraction(0), v[x] + v[y] - 1)
    assert A.one == n


def test_chain_examples():
    A = mv_chain(3)
    assert A.oplus[1, 1] == 2
    assert A.oplus[2, 2] == 3
    assert all(A.oplus[x, 0] == x for x in range(4))
    with pytest.raises(PreconditionError):
        mv_chain(0)
    with pytest.raises(BoundError):
        mv_chain(10, max_n=5)


def test_terms():
    A = mv_chain(3)
    assert mv_term(A, (SCALAR, 3), [1]) == 3
    assert all(mv_term(A, (SCALAR, 0), [x]) == 0 for x in range(4))
    assert mv_term(A, ODOT, [2, 2]) == 1
    assert all(mv_term(A, (POWER, 0), [x]) == 3 for x in range(4))
    assert mv_term(A, (POWER, 2), [2]) == 1
    with pytest.raises(PreconditionError):
        mv_term(A, ODOT, [1])
    with pytest.raises(PreconditionError):
        mv_term(A, (SCALAR, -1), [1])


@given(st.integers(1, 8), st.integers(0, 10), st.data())
def test_scalar_and_power_closed_forms(n, k, data):
    A = mv_chain(n)
    x = data.draw(st.integers(0, n))
    assert mv_term(A, (SCALAR, k), [x]) == min(n, k * x)
    assert mv_term(A, (POWER, k), [x]) == (n if k == 0 else max(0, k * x - (k - 1) * n))


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_is_mv_n(n):
    A = mv_chain(n)
    assert check_mv_axioms(A).passed
    r = check_mvn_axioms(A, n)
    assert r.passed, r.summary()


def test_mv4_j3_example():
    r = check_mvn_axioms(mv_chain(4), 4)
    assert r.law("nullity_j3").passed and r.law("nullity_j3").checked == 5
    assert mvn_exponents(4) == [3]
    assert mvn_exponents(2) == []
    r = check_mvn_axioms(mv_chain(2), 2)
    assert "vacuous" in r.law("nullity").note


def test_mv_chain_3_fails_mv_2():
    r = check_mvn_axioms(mv_chain(3), 2)
    f = r.first_failure
    assert f.law == "saturation" and f.witness == (1,)


@pytest.mark.parametrize("n", range(2, 7))
def test_longer_chain_rejects_shorter_schema(n):
    A = mv_chain(n)
    for m in range(1, n):
        assert not check_mvn_axioms(A, m).passed


def test_mutated_oplus_fails():
    rng = random.Random(0)
    for _ in range(100):
        r = check_mv_axioms(mutate_mv(mv_chain(4), rng))
        assert not r.passed and r.first_failure.witness is not None


def test_proper_pairs():
    assert proper_pairs(4) == []
    assert proper_pairs(5) == [(3, 1, 2)]
    assert (4, 2, 3) in proper_pairs(6)
    for n in range(1, 12):
        for i, k, t in proper_pairs(n):
            assert 3 <= i <= n - 2 and 1 <= k <= n - 4 and k < i and 1 <= t <= n - 1


@pytest.mark.parametrize("n", range(1, 6))
def test_small_n_always_proper(n):
    for obj in symmetric_sequences(PQ, n):
        r = check_l_proper(obj)
        assert r.passed
        assert r.info["status"] == ("vacuous" if n <= 4 else "implied")


def counterexample():
    return IdealSequenceObject(PQ, 6, (0, 1, 2, 1, 0))


def test_n6_counterexample():
    r = check_l_proper(counterexample())
    assert r.first_failure.witness == (4, 2)
    s = check_somv_condition(theta_a(counterexample()))
    assert s.first_failure.witness == (4, 2)
    assert check_somv_condition(counterexample()).first_failure.witness == (4, 2)


def test_all_equal_passes():
    for g in range(4):
        assert check_l_proper(IdealSequenceObject(PQ, 7, (g,) * 6)).passed
        assert check_somv_condition(FiniteSpaceWithOpens(("x", "y"), 7, (g,) * 6)).passed


@pytest.mark.parametrize("k,n", [(1, 7), (2, 7), (3, 6)])
def test_full_J_is_proper(k, n):
    obj = lambda_functor(build_J(FiniteBooleanAlgebra("pqr"[:k]), n).algebra)
    assert check_l_proper(obj).passed


def test_lm_input_accepted():
    assert check_l_proper(canonical(6)).passed


@pytest.mark.parametrize("n", [6, 7])
def test_duality_preserves_condition(n):
    for obj in symmetric_sequences(PQ, n):
        assert check_l_proper(obj).passed == check_somv_condition(theta_a(obj)).passed


def test_remark_variant_reported_as_informational():
    r = check_l_proper(counterexample())
    v = r.law("remark_variant")
    assert v.informational and v.passed
