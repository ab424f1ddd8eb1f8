"""Finite LM_{n+1} algebras given by operation tables.

An algebra carries its lattice tables, the involution ``star`` and one
block of ``n`` unary tables.  The block is tagged ``phi`` (Chrysippian
endomorphisms phi_1..phi_n) or ``j`` (disjoint nuances J_1..J_n); row
``i - 1`` of ``unary`` holds the i-th operation.

All checks are exhaustive over the carrier and vectorized with numpy.
Reports are memoized on a digest of the tables, since the same algebra
is typically checked many times by the constructions built on it.
"""

from __future__ import annotations

import hashlib
import random
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from typing import Callable, Iterable

import numpy as np

from .boolalg import FiniteBooleanAlgebra
from .errors import BoundError, InvariantError, PreconditionError, SignatureError, VerificationError
from .report import AxiomReport

PHI = "phi"
J = "j"
SIGNATURES = (PHI, J)

L_SYSTEM = "L_SYSTEM"
L_ALT = "L_ALT"
J_SYSTEM = "J_SYSTEM"
SYSTEM_ALIASES = {"L": L_SYSTEM, "Lalt": L_ALT, "J": J_SYSTEM, L_SYSTEM: L_SYSTEM, L_ALT: L_ALT, J_SYSTEM: J_SYSTEM}
SYSTEM_SIGNATURE = {L_SYSTEM: PHI, L_ALT: PHI, J_SYSTEM: J}

MAX_N = 16
INDEX_DTYPE = np.int32


def _frozen_array(a, shape: tuple[int, ...], m: int, what: str) -> np.ndarray:
    arr = np.array(a, dtype=INDEX_DTYPE)
    if arr.shape != shape:
        raise InvariantError(f"{what} table has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= m):
        raise InvariantError(f"{what} table has entries outside [0, {m})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LMAlgebra:
    n: int
    signature: str
    join: np.ndarray
    meet: np.ndarray
    star: np.ndarray
    unary: np.ndarray
    zero: int
    one: int
    names: tuple[str, ...] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.signature not in SIGNATURES:
            raise InvariantError(f"unknown signature {self.signature!r}")
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvariantError(f"n must be a positive integer, got {self.n!r}")
        star = np.asarray(self.star)
        m = int(star.shape[0]) if star.ndim == 1 else -1
        if m < 1:
            raise InvariantError("carrier must be non-empty")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "star", _frozen_array(self.star, (m,), m, "star"))
        object.__setattr__(self, "join", _frozen_array(self.join, (m, m), m, "join"))
        object.__setattr__(self, "meet", _frozen_array(self.meet, (m, m), m, "meet"))
        object.__setattr__(self, "unary", _frozen_array(self.unary, (self.n, m), m, "unary"))
        for c in ("zero", "one"):
            v = getattr(self, c)
            if not 0 <= v < m:
                raise InvariantError(f"{c} = {v} outside carrier")
            object.__setattr__(self, c, int(v))
        if self.zero == self.one and m != 1:
            raise InvariantError("zero equals one in a carrier with more than one element")
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != m or len(set(names)) != m:
                raise InvariantError("element names must be distinct, one per element")
            object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return int(self.star.shape[0])

    @cached_property
    def digest(self) -> bytes:
        h = hashlib.sha1()
        h.update(f"{self.n}|{self.signature}|{self.zero}|{self.one}|{self.size}".encode())
        for t in (self.join, self.meet, self.star, self.unary):
            h.update(np.ascontiguousarray(t).tobytes())
        return h.digest()

    @cached_property
    def lattice_digest(self) -> bytes:
        h = hashlib.sha1()
        h.update(f"{self.zero}|{self.one}|{self.size}".encode())
        for t in (self.join, self.meet, self.star):
            h.update(np.ascontiguousarray(t).tobytes())
        return h.digest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LMAlgebra):
            return NotImplemented
        return self.digest == other.digest and self.same_tables(other)

    def __hash__(self) -> int:
        return hash(self.digest)

    def same_tables(self, other: LMAlgebra) -> bool:
        return (
            self.n == other.n
            and self.signature == other.signature
            and self.zero == other.zero
            and self.one == other.one
            and all(
                np.array_equal(getattr(self, t), getattr(other, t)) for t in ("join", "meet", "star", "unary")
            )
        )

    def op(self, i: int) -> np.ndarray:
        """Table of the i-th unary operation, 1-based."""
        return self.unary[i - 1]

    def leq(self, a: int, b: int) -> bool:
        return int(self.meet[a, b]) == a

    def nuances(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.unary[:, x])

    def render(self, x: int) -> str:
        return self.names[x] if self.names else f"#{x}"

    def with_unary(self, unary, signature: str) -> LMAlgebra:
        return replace(self, unary=unary, signature=signature)


def lm_from_tables(n, signature, join, meet, star, unary, zero, one, names=None) -> LMAlgebra:
    return LMAlgebra(n, signature, join, meet, star, unary, zero, one, names)


def trivial(n: int, signature: str = PHI) -> LMAlgebra:
    """The one-element LM algebra."""
    z = [[0]]
    return LMAlgebra(n, signature, z, z, [0], [[0]] * n, 0, 0, ("0",))


def canonical(n: int, max_n: int = MAX_N) -> LMAlgebra:
    """The chain {0, 1/n, ..., 1} with its Chrysippian endomorphisms; index j encodes j/n."""
    if n < 1:
        raise InvariantError(f"n must be at least 1, got {n}")
    if n > max_n:
        raise BoundError(f"n = {n} exceeds the bound {max_n}")
    ar = np.arange(n + 1)
    join = np.maximum.outer(ar, ar)
    meet = np.minimum.outer(ar, ar)
    star = n - ar
    i = np.arange(1, n + 1)[:, None]
    unary = np.where(i + ar[None, :] >= n + 1, n, 0)
    names = tuple("0" if j == 0 else "1" if j == n else f"{j}/{n}" for j in range(n + 1))
    return LMAlgebra(n, PHI, join, meet, star, unary, 0, n, names)


# ---------------------------------------------------------------------------
# exhaustive checking

_CACHE_SIZE = 4096
_cache: OrderedDict = OrderedDict()


def _memo(key, compute: Callable[[], AxiomReport]) -> AxiomReport:
    if key in _cache:
        _cache.move_to_end(key)
        return _cache[key]
    rep = compute()
    _cache[key] = rep
    if len(_cache) > _CACHE_SIZE:
        _cache.popitem(last=False)
    return rep


def _triple(rep: AxiomReport, law: str, m: int, fn: Callable[[np.ndarray], np.ndarray]) -> None:
    """Evaluate a law in (x, y, z) over the carrier, chunked along x."""
    chunk = max(1, (1 << 20) // (m * m))
    for start in range(0, m, chunk):
        xs = np.arange(start, min(m, start + chunk))
        ok = fn(xs)
        if not ok.all():
            w = np.argwhere(~ok)[0]
            rep.fail(law, (w[0] + start, w[1], w[2]), ("x", "y", "z"), m**3)
            return
    rep.ok(law, m**3)


def _de_morgan(L: LMAlgebra) -> AxiomReport:
    J_, M, S = L.join, L.meet, L.star
    m = L.size
    ar = np.arange(m)
    X, Y = ar[:, None], ar[None, :]
    rep = AxiomReport("DE_MORGAN")
    rep.grid("DM.join_comm", J_ == J_.T, ("x", "y"))
    rep.grid("DM.meet_comm", M == M.T, ("x", "y"))
    _triple(rep, "DM.join_assoc", m, lambda xs: J_[J_[xs][:, :, None], ar[None, None, :]] == J_[xs[:, None, None], J_[None]])
    _triple(rep, "DM.meet_assoc", m, lambda xs: M[M[xs][:, :, None], ar[None, None, :]] == M[xs[:, None, None], M[None]])
    rep.grid("DM.absorb_join", J_[X, M] == X, ("x", "y"))
    rep.grid("DM.absorb_meet", M[X, J_] == X, ("x", "y"))
    _triple(rep, "DM.distrib", m, lambda xs: M[xs[:, None, None], J_[None]] == J_[M[xs][:, :, None], M[xs][:, None, :]])
    _triple(rep, "DM.distrib_dual", m, lambda xs: J_[xs[:, None, None], M[None]] == M[J_[xs][:, :, None], J_[xs][:, None, :]])
    rep.grid("DM.bottom", J_[ar, L.zero] == ar, ("x",))
    rep.grid("DM.top", M[ar, L.one] == ar, ("x",))
    rep.grid("DM.involution", S[S] == ar, ("x",))
    rep.grid("DM.de_morgan", S[J_] == M[S[X], S[Y]], ("x", "y"))
    rep.grid("DM.de_morgan_dual", S[M] == J_[S[X], S[Y]], ("x", "y"))
    le = M == X
    rep.grid("DM.star_antitone", ~le | (M[S[Y], S[X]] == S[Y]), ("x", "y"))
    return rep


def check_de_morgan(L: LMAlgebra) -> AxiomReport:
    return _memo((L.lattice_digest, "DM"), lambda: _de_morgan(L))


def _determination(rep: AxiomReport, law: str, L: LMAlgebra) -> None:
    seen: dict[tuple[int, ...], int] = {}
    for x in range(L.size):
        key = tuple(L.unary[:, x].tolist())
        if key in seen:
            rep.fail(law, (seen[key], x), ("x", "y"), L.size)
            return
        seen[key] = x
    rep.ok(law, L.size)


def _phi_laws(L: LMAlgebra, rep: AxiomReport, alt: bool) -> None:
    U, J_, M, S = L.unary, L.join, L.meet, L.star
    n, m = L.n, L.size
    ar = np.arange(m)
    I_ = np.arange(1, n + 1)
    rep.grid("L1", U[:, J_] == J_[U[:, :, None], U[:, None, :]], ("i", "x", "y"), (True, False, False))
    rep.grid("L2", J_[U, S[U]] == L.one, ("i", "x"), (True, False))
    rep.grid("L3", U[:, U] == U[None, :, :], ("i", "j", "x"), (True, True, False))
    rep.grid("L4", U[:, S] == S[U[::-1]], ("i", "x"), (True, False))
    le = M[U[:, None, :], U[None, :, :]] == U[:, None, :]
    rep.grid("L5", le | (I_[:, None, None] > I_[None, :, None]), ("i", "j", "x"), (True, True, False))
    if not alt:
        _determination(rep, "L6", L)
        return
    rep.grid("L7", M[ar, U[n - 1]] == ar, ("x",))
    if n == 1:
        rep.ok("L8", 0, note="vacuous for n = 1")
        return
    a = M[ar[None, :], S[U[:-1]]]
    b = M[a[:, :, None], U[1:, None, :]]
    rep.grid("L8", M[b, ar[None, None, :]] == b, ("i", "x", "y"), (True, False, False))


def _running(table: np.ndarray, rows: Iterable[np.ndarray]) -> list[np.ndarray]:
    """Prefix combinations of equally shaped index arrays under ``table``."""
    out: list[np.ndarray] = []
    acc = None
    for r in rows:
        acc = r if acc is None else table[acc, r]
        out.append(acc)
    return out


def _j_laws(L: LMAlgebra, rep: AxiomReport) -> None:
    U, J_, M, S = L.unary, L.join, L.meet, L.star
    n = L.n

    # J1: for each i, join of J_k(x v y) for k = n-i+1..n, against the split form.
    lhs = _running(J_, (U[k - 1][J_] for k in range(n, 0, -1)))
    rhs = _running(J_, (J_[U[k - 1][:, None], U[k - 1][None, :]] for k in range(n, 0, -1)))
    holds = np.stack([a == b for a, b in zip(lhs, rhs)])
    rep.grid("J1", holds, ("i", "x", "y"), (True, False, False), note=f"i tested over 1..{n}")
    rep.grid("J2", J_[U, S[U]] == L.one, ("i", "x"), (True, False))
    if n > 1:
        rep.grid("J3a", U[:-1][:, U] == L.zero, ("k", "i", "x"), (True, True, False))
    else:
        rep.ok("J3a", 0, note="vacuous for n = 1")
    rep.grid("J3b", U[n - 1][U] == U, ("i", "x"), (True, False))
    if n > 1:
        # J_k(x*) = J_{n-k}(x): row k-1 against row n-k-1
        rep.grid("J4a", U[:-1][:, S] == U[:-1][::-1], ("k", "x"), (True, False))
    else:
        rep.ok("J4a", 0, note="vacuous for n = 1")
    all_meet = _running(M, (S[U[i]] for i in range(n)))[-1]
    rep.grid("J4b", U[n - 1][S] == all_meet, ("x",))
    if n > 1:
        prefix = _running(J_, (U[i] for i in range(n - 1)))
        bound = np.stack([S[p] for p in prefix])  # row l-2 bounds J_l
        rep.grid("J5", M[U[1:], bound] == U[1:], ("l", "x"), offsets=(2, 0))
    else:
        rep.ok("J5", 0, note="vacuous for n = 1")
    _determination(rep, "J6", L)


def _check(L: LMAlgebra, system: str) -> AxiomReport:
    rep = AxiomReport(system)
    rep.merge(check_de_morgan(L))
    if system == J_SYSTEM:
        _j_laws(L, rep)
    else:
        _phi_laws(L, rep, alt=system == L_ALT)
    return rep


def check_axioms(L: LMAlgebra, system: str) -> AxiomReport:
    """Exhaustive check of the De Morgan laws plus one LM axiom system.

    ``system`` is one of ``L_SYSTEM`` (L1-L6), ``L_ALT`` (L1-L5, L7, L8)
    or ``J_SYSTEM`` (J1-J6); the short aliases L, Lalt and J are accepted.
    """
    try:
        system = SYSTEM_ALIASES[system]
    except KeyError:
        raise SignatureError(f"unknown axiom system {system!r}") from None
    if SYSTEM_SIGNATURE[system] != L.signature:
        raise SignatureError(f"{system} needs signature {SYSTEM_SIGNATURE[system]}, algebra has {L.signature}")
    return _memo((L.digest, system), lambda: _check(L, system))


def native_system(L: LMAlgebra) -> str:
    return L_SYSTEM if L.signature == PHI else J_SYSTEM


def is_lm(L: LMAlgebra) -> bool:
    return check_axioms(L, native_system(L)).passed


def require_lm(L: LMAlgebra, system: str | None = None, what: str = "input") -> None:
    system = system or native_system(L)
    rep = check_axioms(L, system)
    if not rep.passed:
        f = rep.first_failure
        raise PreconditionError(f"{what} does not satisfy {system}: {f.law} fails at {f.witness}")


def center_mask(L: LMAlgebra) -> np.ndarray:
    ar = np.arange(L.size)
    return L.join[ar, L.star] == L.one


def check_derived_props(L: LMAlgebra) -> AxiomReport:
    """Consequences of the axioms: lemma items, center characterizations, disjointness."""
    require_lm(L)
    U, M, S = L.unary, L.meet, L.star
    n, m = L.n, L.size
    ar = np.arange(m)
    X = ar[:, None]
    rep = AxiomReport("DERIVED")
    if L.signature == J:
        I_ = np.arange(n)
        disj = (M[U[:, None, :], U[None, :, :]] == L.zero) | (I_[:, None, None] == I_[None, :, None])
        note = "vacuous for n = 1" if n == 1 else ""
        rep.grid("disjoint", disj, ("i", "j", "x"), (True, True, False), note=note)
        return rep
    rep.grid("lemma1", U[:, M] == M[U[:, :, None], U[:, None, :]], ("i", "x", "y"), (True, False, False))
    rep.grid("lemma2", M[U, S[U]] == L.zero, ("i", "x"), (True, False))
    rep.grid("lemma3", U[:, S[U]] == S[U][None, :, :], ("i", "j", "x"), (True, True, False))
    le = M == X
    nuance_le = np.ones((m, m), dtype=bool)
    for i in range(n):
        nuance_le &= M[U[i][:, None], U[i][None, :]] == U[i][:, None]
    rep.grid("lemma4", le == nuance_le, ("x", "y"), note="read as: x <= y iff phi_i(x) <= phi_i(y) for all i")
    literal = le[None, None, :, :] == (M[U[:, None, :], U[None, :, :]] == U[:, None, :])[:, :, :, None]
    rep.grid(
        "lemma4_literal",
        literal,
        ("i", "j", "x", "y"),
        (True, True, False, False),
        informational=True,
        note="printed reading: x <= y iff phi_i(x) <= phi_j(x)",
    )
    rep.grid("lemma5_lower", M[U[0], ar] == U[0], ("x",))
    rep.grid("lemma5_upper", M[ar, U[n - 1]] == ar, ("x",))
    comp = center_mask(L)
    fixed = U == ar[None, :]
    some = fixed.any(axis=0)
    every = fixed.all(axis=0)
    image = np.zeros(m, dtype=bool)
    image[np.unique(U)] = True
    rep.grid("center_some_fixed", comp == some, ("x",))
    rep.grid("center_all_fixed", comp == every, ("x",))
    rep.grid("center_image", comp == image, ("x",))
    rep.grid("center_phi_identity", ~comp[None, :] | fixed, ("i", "x"), (True, False))
    return rep


# ---------------------------------------------------------------------------
# signature conversion


def _phi_to_j_unary(L: LMAlgebra) -> np.ndarray:
    U, M, S = L.unary, L.meet, L.star
    n = L.n
    out = np.empty_like(U)
    out[n - 1] = U[0]
    for i in range(1, n):
        out[i - 1] = M[U[n - i], S[U[n - i - 1]]]
    return out


def _j_to_phi_unary(L: LMAlgebra) -> np.ndarray:
    U, J_ = L.unary, L.join
    n = L.n
    out = np.empty_like(U)
    for i, acc in enumerate(_running(J_, (U[k - 1] for k in range(n, 0, -1)))):
        out[i] = acc
    return out


def phi_to_j(L: LMAlgebra, check: bool = True) -> LMAlgebra:
    """J_n = phi_1 and J_i = phi_{n-i+1} & phi_{n-i}* for i < n."""
    if L.signature != PHI:
        raise SignatureError("phi_to_j needs a phi-signature algebra")
    if check:
        require_lm(L, L_SYSTEM)
    out = L.with_unary(_phi_to_j_unary(L), J)
    if check:
        check_axioms(out, J_SYSTEM).require("phi_to_j result")
    return out


def j_to_phi(L: LMAlgebra, check: bool = True) -> LMAlgebra:
    """phi_i = J_{n-i+1} v ... v J_n."""
    if L.signature != J:
        raise SignatureError("j_to_phi needs a J-signature algebra")
    if check:
        require_lm(L, J_SYSTEM)
    out = L.with_unary(_j_to_phi_unary(L), PHI)
    if check:
        check_axioms(out, L_SYSTEM).require("j_to_phi result")
    return out


def as_phi(L: LMAlgebra, check: bool = True) -> LMAlgebra:
    return L if L.signature == PHI else j_to_phi(L, check)


def as_j(L: LMAlgebra, check: bool = True) -> LMAlgebra:
    return L if L.signature == J else phi_to_j(L, check)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class LMHom:
    source: LMAlgebra
    target: LMAlgebra
    table: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _frozen_array(self.table, (self.source.size,), self.target.size, "hom"))

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def compose(self, first: LMHom) -> LMHom:
        """``self`` after ``first``."""
        return LMHom(first.source, self.target, self.table[first.table])

    def is_injective(self) -> bool:
        return len(np.unique(self.table)) == self.source.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.source.size == self.target.size

    @classmethod
    def identity(cls, L: LMAlgebra) -> LMHom:
        return cls(L, L, np.arange(L.size))


def validate_lm_hom(h: LMHom) -> AxiomReport:
    """Exhaustively check preservation of 0, 1, join, meet, star and every unary operation."""
    A, B, t = h.source, h.target, h.table
    rep = AxiomReport("LM_HOM")
    if A.signature != B.signature or A.n != B.n:
        rep.fail("signature", note=f"{A.signature}/{A.n} vs {B.signature}/{B.n}")
        return rep
    rep.check("zero", int(t[A.zero]) == B.zero, (A.zero,), ("x",))
    rep.check("one", int(t[A.one]) == B.one, (A.one,), ("x",))
    rep.grid("join", t[A.join] == B.join[t[:, None], t[None, :]], ("x", "y"))
    rep.grid("meet", t[A.meet] == B.meet[t[:, None], t[None, :]], ("x", "y"))
    rep.grid("star", t[A.star] == B.star[t], ("x",))
    rep.grid("unary", t[A.unary] == B.unary[:, t], ("i", "x"), (True, False))
    return rep


# ---------------------------------------------------------------------------
# Boolean center


@dataclass(frozen=True, eq=False)
class CenterView:
    """The complemented elements of an LM algebra with an isomorphism onto a powerset.

    ``to_code`` sends a center element (carrier index) to its encoding in
    ``algebra``; ``from_code`` is the inverse.
    """

    parent: LMAlgebra
    elements: tuple[int, ...]
    atoms: tuple[int, ...]
    algebra: FiniteBooleanAlgebra
    to_code: dict[int, int]
    from_code: tuple[int, ...]
    report: AxiomReport

    def __contains__(self, x: int) -> bool:
        return x in self.to_code

    def code(self, x: int) -> int:
        return self.to_code[int(x)]


@lru_cache(maxsize=512)
def boolean_center(L: LMAlgebra) -> CenterView:
    require_lm(L)
    J_, M, S = L.join, L.meet, L.star
    comp = center_mask(L)
    elems = np.flatnonzero(comp)
    rep = AxiomReport("CENTER")
    sub = np.ix_(elems, elems)
    rep.grid("closed_join", comp[J_[sub]], ("x", "y"))
    rep.grid("closed_meet", comp[M[sub]], ("x", "y"))
    rep.grid("closed_star", comp[S[elems]], ("x",))
    rep.check("has_bounds", bool(comp[L.zero] and comp[L.one]))
    rep.require("boolean center")
    nonzero = [int(c) for c in elems if c != L.zero]
    atoms = tuple(c for c in nonzero if not any(d != c and L.leq(d, c) for d in nonzero))
    to_code = {}
    for c in elems:
        code = 0
        for bit, a in enumerate(atoms):
            if L.leq(a, int(c)):
                code |= 1 << bit
        to_code[int(c)] = code
    k = len(atoms)
    codes = sorted(to_code.values())
    rep.check("iso_bijective", codes == list(range(1 << k)), note=f"{len(codes)} elements, {k} atoms")
    rep.require("boolean center")
    from_code = [0] * (1 << k)
    for c, code in to_code.items():
        from_code[code] = c
    fc = np.array(from_code)
    grid = np.arange(1 << k)
    top = (1 << k) - 1
    rep.grid("iso_join", J_[fc[:, None], fc[None, :]] == fc[grid[:, None] | grid[None, :]], ("a", "b"))
    rep.grid("iso_meet", M[fc[:, None], fc[None, :]] == fc[grid[:, None] & grid[None, :]], ("a", "b"))
    rep.grid("iso_complement", S[fc] == fc[top ^ grid], ("a",))
    rep.require("boolean center")
    names = tuple(L.render(a) if L.names else f"e{a}" for a in atoms)
    return CenterView(L, tuple(int(c) for c in elems), atoms, FiniteBooleanAlgebra(names), to_code, tuple(from_code), rep)


# ---------------------------------------------------------------------------
# subalgebras


def subalgebra_generated(L: LMAlgebra, seed: Iterable[int]) -> tuple[LMAlgebra, LMHom]:
    """Least subalgebra containing ``seed``, with its inclusion into ``L``."""
    m = L.size
    mask = np.zeros(m, dtype=bool)
    for s in seed:
        if not 0 <= int(s) < m:
            raise InvariantError(f"seed element {s} outside carrier")
        mask[int(s)] = True
    mask[[L.zero, L.one]] = True
    while True:
        idx = np.flatnonzero(mask)
        sub = np.ix_(idx, idx)
        new = mask.copy()
        new[L.join[sub].ravel()] = True
        new[L.meet[sub].ravel()] = True
        new[L.star[idx]] = True
        new[L.unary[:, idx].ravel()] = True
        if (new == mask).all():
            break
        mask = new
    idx = np.flatnonzero(mask)
    pos = np.full(m, -1)
    pos[idx] = np.arange(len(idx))
    sub = np.ix_(idx, idx)
    names = tuple(L.names[i] for i in idx) if L.names else None
    S_ = LMAlgebra(
        L.n, L.signature, pos[L.join[sub]], pos[L.meet[sub]], pos[L.star[idx]], pos[L.unary[:, idx]],
        pos[L.zero], pos[L.one], names,
    )
    if is_lm(L) and not is_lm(S_):
        raise VerificationError("generated subalgebra fails the axiom suite of its parent")
    return S_, LMHom(S_, L, idx)


# ---------------------------------------------------------------------------
# Moisil representation


@dataclass(frozen=True, eq=False)
class Representation:
    """Embedding of an LM algebra into a power of the canonical chain.

    ``components[u]`` is the morphism attached to the u-th atom of the
    Boolean center; ``vectors[x]`` is the image of ``x`` in the product.
    """

    source: LMAlgebra
    chain: LMAlgebra
    center: CenterView
    components: tuple[LMHom, ...]
    vectors: np.ndarray
    report: AxiomReport

    @property
    def is_isomorphism(self) -> bool:
        return self.source.size == (self.chain.size ** len(self.components))


def moisil_represent(L: LMAlgebra) -> Representation:
    """One morphism into the canonical chain per ultrafilter of the center.

    ``h_U(x)`` is i/n where i counts the j with phi_j(x) in U; the product
    map is checked to be an injective morphism whose components land in
    subalgebras of the chain.
    """
    if L.signature != PHI:
        raise SignatureError("moisil_represent needs a phi-signature algebra")
    require_lm(L, L_SYSTEM)
    C = boolean_center(L)
    if not C.atoms:
        raise PreconditionError("center is trivial; there are no ultrafilters")
    n = L.n
    chain = canonical(n)
    rep = AxiomReport("MOISIL")
    comps = []
    for u, a in enumerate(C.atoms):
        in_u = L.meet[a, L.unary] == a
        h = LMHom(L, chain, in_u.sum(axis=0))
        hr = validate_lm_hom(h)
        rep.merge(hr, f"h{u}.")
        image = np.unique(h.table)
        closure, _ = subalgebra_generated(chain, image.tolist())
        rep.check(f"h{u}.image_subalgebra", closure.size == len(image), note=f"image {image.tolist()}")
        comps.append(h)
    vectors = np.stack([h.table for h in comps], axis=1)
    distinct = len({tuple(v) for v in vectors.tolist()})
    rep.check("product_injective", distinct == L.size, checked=L.size)
    rep.info["isomorphism"] = L.size == chain.size ** len(comps)
    rep.require("Moisil representation")
    return Representation(L, chain, C, tuple(comps), vectors, rep)


# ---------------------------------------------------------------------------
# mutation testing


_TABLES = ("join", "meet", "star", "unary")


def mutate(L: LMAlgebra, rng: random.Random) -> tuple[LMAlgebra, str]:
    """Change one entry of one table to a different carrier element."""
    m = L.size
    if m < 2:
        raise InvariantError("cannot mutate a one-element algebra")
    sizes = {"join": m * m, "meet": m * m, "star": m, "unary": L.n * m}
    total = sum(sizes.values())
    r = rng.randrange(total)
    for name in _TABLES:
        if r < sizes[name]:
            break
        r -= sizes[name]
    arr = np.array(getattr(L, name))
    flat = arr.reshape(-1)
    old = int(flat[r])
    new = rng.randrange(m - 1)
    new += new >= old
    flat[r] = new
    where = np.unravel_index(r, arr.shape)
    desc = f"{name}{list(map(int, where))}: {old} -> {new}"
    return replace(L, **{name: arr}), desc


def mutants(L: LMAlgebra, count: int, seed: int = 0) -> list[tuple[LMAlgebra, str]]:
    rng = random.Random(seed)
    return [mutate(L, rng) for _ in range(count)]


def swap_unary(L: LMAlgebra, i: int, j: int) -> LMAlgebra:
    U = np.array(L.unary)
    U[[i - 1, j - 1]] = U[[j - 1, i - 1]]
    return replace(L, unary=U)
