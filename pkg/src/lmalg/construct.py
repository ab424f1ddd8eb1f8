"""Tuple constructions over a Boolean algebra and the functors between LM algebras and Boolean data.

``build_T`` is the algebra of increasing n-tuples; ``build_J`` carries the
same structure to pairwise-disjoint tuples along the bijection f/g.
``lambda_functor``/``sigma_functor`` pass between J-signature LM algebras
and Boolean algebras equipped with a symmetric ideal sequence.

Carriers of tuple algebras are listed in lexicographic order of the
element encoding, so indices are reproducible across runs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .boolalg import (
    BooleanHom,
    FiniteBooleanAlgebra,
    Ideal,
    check_ideal,
    hom_from_atom_map,
    validate_hom,
)
from .errors import BoundError, InvariantError, SignatureError, VerificationError
from .lm import (
    J,
    J_SYSTEM,
    L_SYSTEM,
    PHI,
    LMAlgebra,
    LMHom,
    _phi_to_j_unary,
    as_j,
    as_phi,
    boolean_center,
    check_axioms,
    require_lm,
    trivial,
    validate_lm_hom,
)
from .report import AxiomReport

MAX_CARRIER = 50_000
CHECK_LIMIT = 256


# ---------------------------------------------------------------------------
# tuples and the f/g bijection


def _f(entries: Sequence[int]) -> tuple[int, ...]:
    out, acc = [], 0
    for y in entries:
        acc |= y
        out.append(acc)
    return tuple(out)


def _g(entries: Sequence[int], top: int) -> tuple[int, ...]:
    out, prev = [], 0
    for x in entries:
        out.append(x & (top ^ prev))
        prev = x
    return tuple(out)


@dataclass(frozen=True)
class MonotoneTuple:
    parent: FiniteBooleanAlgebra
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        for e in self.entries:
            self.parent.require(e)
        for i, (a, b) in enumerate(zip(self.entries, self.entries[1:]), start=1):
            if not self.parent.leq(a, b):
                raise InvariantError(f"x_{i} = {a} is not below x_{i + 1} = {b}")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DisjointTuple:
    parent: FiniteBooleanAlgebra
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        for e in self.entries:
            self.parent.require(e)
        for (i, a), (j, b) in itertools.combinations(enumerate(self.entries, start=1), 2):
            if a & b:
                raise InvariantError(f"y_{i} and y_{j} are not disjoint")

    @property
    def n(self) -> int:
        return len(self.entries)


def tuple_bijection(direction: str, t: MonotoneTuple | DisjointTuple) -> MonotoneTuple | DisjointTuple:
    """``F`` sends disjoint tuples to prefix joins; ``G`` takes successive differences."""
    if direction == "F":
        if not isinstance(t, DisjointTuple):
            raise InvariantError("F expects a disjoint tuple")
        return MonotoneTuple(t.parent, _f(t.entries))
    if direction == "G":
        if not isinstance(t, MonotoneTuple):
            raise InvariantError("G expects a monotone tuple")
        return DisjointTuple(t.parent, _g(t.entries, t.parent.top))
    raise ValueError(f"direction must be 'F' or 'G', got {direction!r}")


# ---------------------------------------------------------------------------
# tuple algebras


@dataclass(frozen=True, eq=False)
class TupleAlgebra:
    """An LM algebra whose elements are n-tuples over ``base``; ``tuples[x]`` is element ``x``."""

    kind: str
    algebra: LMAlgebra
    base: FiniteBooleanAlgebra
    tuples: np.ndarray

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {tuple(row): i for i, row in enumerate(self.tuples.tolist())}

    def index_of(self, t: Iterable[int]) -> int:
        try:
            return self.index[tuple(int(v) for v in t)]
        except KeyError:
            raise InvariantError(f"{tuple(t)} is not an element of this {self.kind} algebra") from None

    def tuple_at(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.tuples[x])

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def size(self) -> int:
        return self.algebra.size


class _Keys:
    """Lexicographic integer keys for n-tuples over a k-atom algebra."""

    def __init__(self, k: int, n: int):
        if k * n > 62:
            raise BoundError(f"tuples of length {n} over {k} atoms exceed the 62-bit key space")
        self.shifts = np.array([k * (n - 1 - i) for i in range(n)], dtype=np.int64)

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return (t.astype(np.int64) << self.shifts).sum(axis=-1)


def _lookup(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(sorted_keys, keys)
    pos = np.minimum(pos, len(sorted_keys) - 1)
    if not (sorted_keys[pos] == keys).all():
        raise VerificationError("operation result left the carrier")
    return pos


def _rowwise(fn, m: int, n: int, budget: int = 1 << 22) -> np.ndarray:
    """Assemble an m x m table from ``fn(rows) -> (len(rows), m)`` in chunks."""
    chunk = max(1, budget // (m * n))
    return np.concatenate([fn(np.arange(s, min(m, s + chunk))) for s in range(0, m, chunk)])


def _render(B: FiniteBooleanAlgebra, rows: np.ndarray) -> tuple[str, ...]:
    return tuple("(" + ",".join(B.render(int(v)) for v in row) + ")" for row in rows.tolist())


def _should_check(check: bool | None, size: int) -> bool:
    return size <= CHECK_LIMIT if check is None else check


def _check_size(k: int, n: int, max_size: int) -> None:
    if n < 1:
        raise InvariantError(f"n must be at least 1, got {n}")
    if (n + 1) ** k > max_size:
        raise BoundError(f"(n+1)^k = {(n + 1) ** k} exceeds the carrier bound {max_size}")


@lru_cache(maxsize=128)
def _build_T(B: FiniteBooleanAlgebra, n: int) -> TupleAlgebra:
    k, top = B.atom_count, B.top
    keyf = _Keys(k, n)
    # each atom enters at some position e in 1..n, or never (e = n + 1)
    combos = list(itertools.product(range(1, n + 2), repeat=k))
    P = np.array(combos, dtype=np.int64).reshape(len(combos), k)
    bits = (1 << np.arange(k, dtype=np.int64))
    X = np.stack([((P <= i) * bits).sum(axis=1) for i in range(1, n + 1)], axis=1)
    keys = keyf(X)
    order = np.argsort(keys, kind="stable")
    X, keys = X[order], keys[order]
    m = len(X)
    look = lambda t: _lookup(keys, keyf(t))
    join = _rowwise(lambda r: look(X[r, None, :] | X[None, :, :]), m, n)
    meet = _rowwise(lambda r: look(X[r, None, :] & X[None, :, :]), m, n)
    star = look(top ^ X[:, ::-1])
    unary = np.stack([look(np.repeat(X[:, i : i + 1], n, axis=1)) for i in range(n)])
    L = LMAlgebra(n, PHI, join, meet, star, unary, 0, m - 1, _render(B, X))
    X.setflags(write=False)
    return TupleAlgebra("T", L, B, X)


def build_T(B: FiniteBooleanAlgebra, n: int, check: bool | None = None, max_size: int = MAX_CARRIER) -> TupleAlgebra:
    """Increasing n-tuples over ``B`` with componentwise lattice operations.

    ``(x_1..x_n)* = (~x_n..~x_1)`` and ``phi_i`` repeats ``x_i`` in every
    coordinate.  With ``check=None`` the L-system is verified when the
    carrier has at most ``CHECK_LIMIT`` elements.
    """
    _check_size(B.atom_count, n, max_size)
    T = _build_T(B, n)
    if _should_check(check, T.size):
        check_axioms(T.algebra, L_SYSTEM).require("T(B)")
    return T


def check_j_closed_forms(JB: TupleAlgebra) -> AxiomReport:
    """Compare operations carried over to J(B) with their closed forms.

    J_i and join must match exactly.  The printed star formula is reported
    for comparison only; the form actually produced by transport is
    ``(meet of ~y_i, y_n, ..., y_2)``.
    """
    L, B, Y = JB.algebra, JB.base, JB.tuples
    n, m, top = L.n, L.size, B.top
    rep = AxiomReport("J_CLOSED_FORMS")
    for i in range(1, n):
        exp = np.zeros_like(Y)
        exp[:, 0] = Y[:, n - i]
        rep.grid(f"J{i}_closed", (Y[L.unary[i - 1]] == exp).all(axis=1), ("y",))
    exp = np.zeros_like(Y)
    exp[:, 0] = Y[:, 0]
    rep.grid(f"J{n}_closed", (Y[L.unary[n - 1]] == exp).all(axis=1), ("y",))

    def join_rows(r):
        s = Y[r, None, :] | Y[None, :, :]
        w = s.copy()
        seen = s[..., 0].copy()
        for i in range(1, n):
            w[..., i] = s[..., i] & (top ^ seen)
            seen |= s[..., i]
        return (Y[L.join[r]] == w).all(axis=-1)

    rep.grid("join_closed", _rowwise(join_rows, m, n), ("y", "z"))
    ar = np.arange(m)
    rep.grid("star_involution", L.star[L.star] == ar, ("y",))
    rep.grid("star_de_morgan", L.star[L.join] == L.meet[L.star[:, None], L.star[None, :]], ("y", "z"))
    allc = np.bitwise_and.reduce(top ^ Y, axis=1)
    transported = np.concatenate([allc[:, None], Y[:, :0:-1]], axis=1)
    rep.grid("star_transported_form", (Y[L.star] == transported).all(axis=1), ("y",))
    printed = np.concatenate([allc[:, None], (top ^ Y)[:, :0:-1]], axis=1)
    rep.grid(
        "star_printed_form",
        (Y[L.star] == printed).all(axis=1),
        ("y",),
        informational=True,
        note="printed form (meet ~y_i, ~y_n, ..., ~y_2) compared with the transported star",
    )
    disjoint = np.ones(m, dtype=bool)
    for a, b in itertools.combinations(range(n), 2):
        disjoint &= (printed[:, a] & printed[:, b]) == 0
    allc2 = np.bitwise_and.reduce(top ^ printed, axis=1)
    twice = np.concatenate([allc2[:, None], (top ^ printed)[:, :0:-1]], axis=1)
    rep.grid(
        "star_printed_involution",
        disjoint & (twice == Y).all(axis=1),
        ("y",),
        informational=True,
        note="printed form applied twice must return a disjoint tuple equal to the input",
    )
    return rep


@lru_cache(maxsize=128)
def _build_J(B: FiniteBooleanAlgebra, n: int) -> TupleAlgebra:
    T = _build_T(B, n)
    X, top = T.tuples, B.top
    Y = X.copy()
    Y[:, 1:] = X[:, 1:] & (top ^ X[:, :-1])
    keyf = _Keys(B.atom_count, n)
    t_of_j = np.argsort(keyf(Y), kind="stable")
    j_of_t = np.empty_like(t_of_j)
    j_of_t[t_of_j] = np.arange(len(t_of_j))
    Y = Y[t_of_j]
    TL = T.algebra
    sub = np.ix_(t_of_j, t_of_j)
    unary = _phi_to_j_unary(TL)
    L = LMAlgebra(
        n, J, j_of_t[TL.join[sub]], j_of_t[TL.meet[sub]], j_of_t[TL.star[t_of_j]], j_of_t[unary[:, t_of_j]],
        j_of_t[TL.zero], j_of_t[TL.one], _render(B, Y),
    )
    Y.setflags(write=False)
    JB = TupleAlgebra("J", L, B, Y)
    check_j_closed_forms(JB).require("J(B) closed forms")
    return JB


def build_J(B: FiniteBooleanAlgebra, n: int, check: bool | None = None, max_size: int = MAX_CARRIER) -> TupleAlgebra:
    """Pairwise-disjoint n-tuples over ``B``, every operation carried over from T(B) along f/g."""
    _check_size(B.atom_count, n, max_size)
    JB = _build_J(B, n)
    if _should_check(check, JB.size):
        check_axioms(JB.algebra, J_SYSTEM).require("J(B)")
    return JB


# ---------------------------------------------------------------------------
# adjunction between LM algebras and Boolean algebras


def t_map(g: BooleanHom, n: int) -> LMHom:
    """T applied to a Boolean hom: act on every coordinate."""
    S, Tt = build_T(g.source, n, check=False), build_T(g.target, n, check=False)
    tab = np.array(g.table)
    return LMHom(S.algebra, Tt.algebra, [Tt.index_of(row) for row in tab[S.tuples].tolist()])


def eta(L: LMAlgebra) -> LMHom:
    """Unit ``x -> (phi_1(x), ..., phi_n(x))`` into T of the center."""
    if L.signature != PHI:
        raise SignatureError("eta needs a phi-signature algebra")
    require_lm(L, L_SYSTEM)
    C = boolean_center(L)
    T = build_T(C.algebra, L.n)
    codes = np.vectorize(C.code, otypes=[np.int64])(L.unary.T) if L.size else np.zeros((0, L.n))
    h = LMHom(L, T.algebra, [T.index_of(row) for row in codes.tolist()])
    validate_lm_hom(h).require("eta")
    if not h.is_injective():
        raise VerificationError("eta is not injective")
    return h


def epsilon(B: FiniteBooleanAlgebra, n: int) -> BooleanHom:
    """Counit: a central element of T(B), a constant tuple, goes to its first coordinate."""
    T = build_T(B, n)
    C = boolean_center(T.algebra)
    h = BooleanHom(C.algebra, B, tuple(int(T.tuples[x, 0]) for x in C.from_code))
    validate_hom(h).require("epsilon")
    if not h.is_bijective():
        raise VerificationError("epsilon is not bijective")
    return h


def check_adjunction(L: LMAlgebra) -> AxiomReport:
    """Unit, counit and both triangle identities for one LM algebra and its center."""
    L = as_phi(L)
    n = L.n
    rep = AxiomReport("ADJUNCTION")
    h = eta(L)
    rep.merge(validate_lm_hom(h), "eta.")
    rep.check("eta.injective", h.is_injective(), checked=L.size)
    C = boolean_center(L)
    B = C.algebra
    e = epsilon(B, n)
    rep.merge(validate_hom(e), "epsilon.")
    rep.check("epsilon.bijective", e.is_bijective(), checked=B.size)
    # T(eps_B) . eta_T(B) = id on T(B)
    T = build_T(B, n)
    eT = eta(T.algebra)
    tri = t_map(e, n).compose(eT)
    ar = np.arange(T.size)
    rep.grid("triangle_T", tri.table == ar, ("x",))
    # eps_C(L) . C(eta_L) = id on C(L)
    CT = boolean_center(T.algebra)
    back = [e.table[CT.code(h(C.from_code[c]))] for c in B.elements()]
    rep.grid("triangle_C", np.array(back) == np.arange(B.size), ("c",))
    return rep


# ---------------------------------------------------------------------------
# Boolean algebras with symmetric ideal sequences


@dataclass(frozen=True)
class IdealSequenceObject:
    """A Boolean algebra with ideals I_1..I_{n-1}; ``generators[i-1]`` generates I_i."""

    base: FiniteBooleanAlgebra
    n: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        if self.n < 1:
            raise InvariantError(f"n must be at least 1, got {self.n}")
        if len(self.generators) != self.n - 1:
            raise InvariantError(f"expected {self.n - 1} ideal generators, got {len(self.generators)}")
        for g in self.generators:
            self.base.require(g)
        for i in range(1, self.n):
            if self.gen(i) != self.gen(self.n - i):
                raise InvariantError(f"ideal sequence is not symmetric: I_{i} != I_{self.n - i}")

    def gen(self, i: int) -> int:
        """Generator of I_i; I_n is the whole algebra by convention."""
        return self.base.top if i == self.n else self.generators[i - 1]

    def ideal(self, i: int) -> Ideal:
        return Ideal(self.base, self.gen(i))

    @property
    def ideals(self) -> tuple[Ideal, ...]:
        return tuple(self.ideal(i) for i in range(1, self.n))


def symmetric_sequences(B: FiniteBooleanAlgebra, n: int) -> list[IdealSequenceObject]:
    """Every symmetric ideal sequence on ``B``."""
    free = list(range(1, n // 2 + 1))
    out = []
    for choice in itertools.product(B.elements(), repeat=len(free)):
        gens = [0] * (n - 1)
        for i, g in zip(free, choice):
            gens[i - 1] = gens[n - i - 1] = g
        out.append(IdealSequenceObject(B, n, tuple(gens)))
    return out


@dataclass(frozen=True)
class BoolIArrow:
    """A Boolean hom between objects that carries each I_i into I'_i."""

    source: IdealSequenceObject
    target: IdealSequenceObject
    hom: BooleanHom

    def compose(self, first: BoolIArrow) -> BoolIArrow:
        return BoolIArrow(first.source, self.target, self.hom.compose(first.hom))


def validate_arrow(a: BoolIArrow) -> AxiomReport:
    rep = validate_hom(a.hom)
    rep.system = "BOOLI_ARROW"
    if a.source.n != a.target.n:
        rep.fail("same_n", note=f"{a.source.n} vs {a.target.n}")
        return rep
    for i in range(1, a.source.n):
        I, Ip = a.source.ideal(i), a.target.ideal(i)
        bad = next((b for b in I.members() if a.hom(b) not in Ip), None)
        rep.check(f"ideal_{i}", bad is None, () if bad is None else (bad,), ("b",), len(I))
    return rep


@lru_cache(maxsize=1024)
def _sigma(obj: IdealSequenceObject) -> TupleAlgebra:
    B, n = obj.base, obj.n
    JB = _build_J(B, n)
    Y = JB.tuples
    bounds = np.array([B.top] + [obj.gen(n - i + 1) for i in range(2, n + 1)], dtype=np.int64)
    mask = ((Y & ~bounds[None, :]) == 0).all(axis=1)
    idx = np.flatnonzero(mask)
    L = JB.algebra
    sub = np.ix_(idx, idx)
    results = [L.join[sub], L.meet[sub], L.star[idx], L.unary[:, idx]]
    if not all(mask[r].all() for r in results):
        raise VerificationError("Sigma carrier is not closed under the J(B) operations")
    pos = np.full(L.size, -1)
    pos[idx] = np.arange(len(idx))
    names = tuple(L.names[i] for i in idx)
    S = LMAlgebra(n, J, pos[results[0]], pos[results[1]], pos[results[2]], pos[results[3]], pos[L.zero], pos[L.one], names)
    tup = Y[idx]
    tup.setflags(write=False)
    return TupleAlgebra("Sigma", S, B, tup)


def sigma_functor(obj: IdealSequenceObject, check: bool | None = None) -> TupleAlgebra:
    """Disjoint tuples with y_i in I_{n-i+1} for i >= 2, as a sub-LM-algebra of J(B)."""
    _check_size(obj.base.atom_count, obj.n, MAX_CARRIER)
    S = _sigma(obj)
    if _should_check(check, S.size):
        check_axioms(S.algebra, J_SYSTEM).require("Sigma")
    return S


@lru_cache(maxsize=1024)
def _lambda(L: LMAlgebra) -> IdealSequenceObject:
    C = boolean_center(L)
    gens = []
    for i in range(1, L.n):
        image = np.unique(L.unary[i - 1]).tolist()
        if not all(x in C for x in image):
            raise VerificationError(f"J_{i} takes a non-central value")
        rep = check_ideal(C.algebra, (C.code(x) for x in image))
        if not rep.passed:
            f = rep.first_failure
            raise VerificationError(f"image of J_{i} is not an ideal of the center: {f.law} at {f.witness}")
        gens.append(rep.info["generator"])
    try:
        return IdealSequenceObject(C.algebra, L.n, tuple(gens))
    except InvariantError as exc:
        raise VerificationError(f"J-images do not form a symmetric sequence: {exc}") from None


def lambda_functor(L: LMAlgebra) -> IdealSequenceObject:
    """The center of ``L`` with I_i the image of J_i."""
    if L.signature != J:
        raise SignatureError("lambda_functor needs a J-signature algebra")
    require_lm(L, J_SYSTEM)
    return _lambda(L)


def lambda_map(f: LMHom) -> BoolIArrow:
    """Restriction of an LM morphism to the centers, in center coordinates."""
    CA, CB = boolean_center(f.source), boolean_center(f.target)
    try:
        table = tuple(CB.code(f(x)) for x in CA.from_code)
    except KeyError:
        raise VerificationError("morphism sends a central element outside the center") from None
    return BoolIArrow(lambda_functor(f.source), lambda_functor(f.target), BooleanHom(CA.algebra, CB.algebra, table))


def sigma_map(a: BoolIArrow) -> LMHom:
    """Sigma applied to an arrow: act on every coordinate."""
    S, Sp = sigma_functor(a.source), sigma_functor(a.target)
    tab = np.array(a.hom.table)
    return LMHom(S.algebra, Sp.algebra, [Sp.index_of(row) for row in tab[S.tuples].tolist()])


@lru_cache(maxsize=1024)
def kappa(L: LMAlgebra) -> LMHom:
    """``x -> (J_n(x), J_{n-1}(x), ..., J_1(x))`` from ``L`` onto Sigma(Lambda(L))."""
    C = boolean_center(L)
    S = sigma_functor(lambda_functor(L))
    rows = [[C.code(L.unary[k - 1, x]) for k in range(L.n, 0, -1)] for x in range(L.size)]
    return LMHom(L, S.algebra, [S.index_of(r) for r in rows])


@lru_cache(maxsize=1024)
def base_iso(obj: IdealSequenceObject) -> BooleanHom:
    """``b -> (b, 0, ..., 0)`` from the base of ``obj`` onto the base of Lambda(Sigma(obj))."""
    S = sigma_functor(obj)
    C = boolean_center(S.algebra)
    zeros = (0,) * (obj.n - 1)
    return BooleanHom(obj.base, C.algebra, tuple(C.code(S.index_of((b,) + zeros)) for b in obj.base.elements()))


# ---------------------------------------------------------------------------
# seeded arrow families


def _random_atom_map(rng: random.Random, src_atoms: int, max_atoms: int) -> tuple[int, list[int]]:
    k = rng.randint(1, max(1, max_atoms))
    return k, [rng.randrange(src_atoms) for _ in range(k)]


def sample_object_arrows(obj: IdealSequenceObject, count: int, seed: int = 0) -> list[BoolIArrow]:
    """Identity plus ``count`` arrows induced by random atom maps into fresh bases.

    Target ideals are the smallest ones allowed, randomly enlarged in
    symmetric pairs.
    """
    from .boolalg import default_atoms

    rng = random.Random(seed)
    B, n = obj.base, obj.n
    out = [BoolIArrow(obj, obj, BooleanHom.identity(B))]
    if B.atom_count == 0:
        return out
    for _ in range(count):
        k, m = _random_atom_map(rng, B.atom_count, B.atom_count)
        Bp = FiniteBooleanAlgebra(default_atoms(k))
        g = hom_from_atom_map(B, Bp, m)
        gens = [0] * (n - 1)
        for i in range(1, n // 2 + 1):
            v = g(obj.gen(i)) | (rng.randrange(Bp.size) if rng.random() < 0.5 else 0)
            gens[i - 1] = gens[n - i - 1] = v
        out.append(BoolIArrow(obj, IdealSequenceObject(Bp, n, tuple(gens)), g))
    return out


def sample_lm_arrows(L: LMAlgebra, count: int, seed: int = 0) -> list[LMHom]:
    """Identity, collapse to the one-element algebra, the unit into T of the center, and
    ``count`` composites of the unit with T of random atom-map homs; all in the J signature."""
    from .boolalg import default_atoms

    rng = random.Random(seed)
    Lj = as_j(L)
    n = L.n
    out = [LMHom.identity(Lj), LMHom(Lj, trivial(n, J), np.zeros(L.size, dtype=int))]
    e = eta(as_phi(L))
    C = boolean_center(as_phi(L))
    out.append(LMHom(Lj, as_j(e.target), e.table))
    if C.algebra.atom_count == 0:
        return out
    for _ in range(count):
        k, m = _random_atom_map(rng, C.algebra.atom_count, C.algebra.atom_count)
        g = hom_from_atom_map(C.algebra, FiniteBooleanAlgebra(default_atoms(k)), m)
        tg = t_map(g, n)
        out.append(LMHom(Lj, as_j(tg.target), tg.table[e.table]))
    return out


# ---------------------------------------------------------------------------
# the equivalence


def check_cat_equivalence(
    L: LMAlgebra,
    obj: IdealSequenceObject,
    lm_arrows: Sequence[LMHom] | None = None,
    obj_arrows: Sequence[BoolIArrow] | None = None,
    seed: int = 0,
    arrow_count: int = 3,
) -> AxiomReport:
    """Both composites of Lambda and Sigma are naturally isomorphic to the identity.

    (a) kappa: L -> Sigma(Lambda(L)) is an LM isomorphism; (b) b -> (b,0,..,0)
    identifies ``obj`` with Lambda(Sigma(obj)), ideals included; (c) both
    families of isomorphisms are natural on the sampled arrows.
    """
    if L.signature != J:
        raise SignatureError("check_cat_equivalence needs a J-signature algebra")
    require_lm(L, J_SYSTEM)
    rep = AxiomReport("CAT_EQUIVALENCE")
    k = kappa(L)
    rep.merge(validate_lm_hom(k), "kappa.")
    rep.check("kappa.bijective", k.is_bijective(), checked=L.size)

    S = sigma_functor(obj)
    rep.merge(check_axioms(S.algebra, J_SYSTEM), "sigma.")
    back = lambda_functor(S.algebra)
    iso = base_iso(obj)
    rep.merge(validate_hom(iso), "base_iso.")
    rep.check("base_iso.bijective", iso.is_bijective(), checked=obj.base.size)
    for i in range(1, obj.n):
        rep.check(f"ideals_match.{i}", iso(obj.gen(i)) == back.gen(i), (i,), ("i",))

    if lm_arrows is None:
        lm_arrows = sample_lm_arrows(L, arrow_count, seed)
    for a, f in enumerate(lm_arrows):
        lf = lambda_map(f)
        rep.merge(validate_arrow(lf), f"lambda_arrow{a}.")
        sf = sigma_map(lf)
        lhs = kappa(f.target).table[f.table]
        rhs = sf.table[k.table]
        rep.grid(f"natural_kappa{a}", lhs == rhs, ("x",))
    if obj_arrows is None:
        obj_arrows = sample_object_arrows(obj, arrow_count, seed)
    for a, g in enumerate(obj_arrows):
        rep.merge(validate_arrow(g), f"object_arrow{a}.")
        lsg = lambda_map(sigma_map(g))
        lhs = [base_iso(g.target)(g.hom(b)) for b in obj.base.elements()]
        rhs = [lsg.hom(iso(b)) for b in obj.base.elements()]
        rep.grid(f"natural_base{a}", np.array(lhs) == np.array(rhs), ("b",))
    return rep
