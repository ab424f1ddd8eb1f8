"""MV and MV_n algebras on finite carriers, and the ideal condition for properness.

An :class:`MVAlgebra` stores ``oplus`` and ``star`` as integer tables over
carrier indices.  The derived operations are ``1 = 0*`` and
``x (.) y = (x* (+) y*)*``.  Scalar multiples and powers follow the usual
recursions ``0x = 0``, ``(k+1)x = kx (+) x`` and ``x^0 = 1``,
``x^(k+1) = x^k (.) x``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .construct import IdealSequenceObject, lambda_functor
from .errors import BoundError, InvariantError, PreconditionError
from .lm import LMAlgebra, as_j
from .report import AxiomReport
from .stone import FiniteSpaceWithOpens

MAX_CHAIN = 256

ODOT = "ODOT"
SCALAR = "SCALAR"
POWER = "POWER"


@dataclass(frozen=True, eq=False)
class MVAlgebra:
    size: int
    oplus: np.ndarray
    star: np.ndarray
    zero: int
    names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        m = int(self.size)
        if m < 1:
            raise InvariantError("an MV algebra needs a nonempty carrier")
        oplus = np.array(self.oplus, dtype=np.int32)
        star = np.array(self.star, dtype=np.int32)
        if oplus.shape != (m, m):
            raise InvariantError(f"oplus table has shape {oplus.shape}, expected {(m, m)}")
        if star.shape != (m,):
            raise InvariantError(f"star table has shape {star.shape}, expected {(m,)}")
        for name, t in (("oplus", oplus), ("star", star)):
            if t.size and (t.min() < 0 or t.max() >= m):
                raise InvariantError(f"{name} table leaves the carrier")
        if not 0 <= int(self.zero) < m:
            raise InvariantError(f"zero {self.zero} is not a carrier index")
        oplus.setflags(write=False)
        star.setflags(write=False)
        object.__setattr__(self, "size", m)
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "oplus", oplus)
        object.__setattr__(self, "star", star)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != m:
                raise InvariantError("names must label every element")
            object.__setattr__(self, "names", names)

    @property
    def one(self) -> int:
        return int(self.star[self.zero])

    @property
    def odot(self) -> np.ndarray:
        s = self.star
        return s[self.oplus[s[:, None], s[None, :]]]

    @property
    def digest(self) -> str:
        h = hashlib.sha1()
        for t in (self.oplus, self.star, np.array([self.zero], dtype=np.int32)):
            h.update(np.ascontiguousarray(t).tobytes())
        return h.hexdigest()

    def __eq__(self, other) -> bool:
        return isinstance(other, MVAlgebra) and self.size == other.size and self.digest == other.digest

    def __hash__(self) -> int:
        return hash(self.digest)

    def render(self, x: int) -> str:
        return self.names[x] if self.names else f"#{x}"


def mv_chain(n: int, max_n: int = MAX_CHAIN) -> MVAlgebra:
    """The Lukasiewicz chain {0, 1/n, ..., 1} with truncated addition; index i is i/n."""
    if n < 1:
        raise PreconditionError(f"chain length must be at least 1, got {n}")
    if n > max_n:
        raise BoundError(f"n={n} exceeds the bound {max_n}")
    idx = np.arange(n + 1)
    oplus = np.minimum(n, idx[:, None] + idx[None, :])
    names = tuple(str(Fraction(i, n)) for i in range(n + 1))
    return MVAlgebra(n + 1, oplus, n - idx, 0, names)


def _scalar_all(A: MVAlgebra, k: int) -> np.ndarray:
    """``kx`` for every carrier element ``x`` at once."""
    xs = np.arange(A.size)
    acc = np.full(A.size, A.zero, dtype=np.int32)
    for _ in range(k):
        acc = A.oplus[acc, xs]
    return acc


def _power_all(A: MVAlgebra, k: int, base: np.ndarray | None = None) -> np.ndarray:
    """``y^k`` for ``y`` ranging over ``base`` (default: the carrier)."""
    ys = np.arange(A.size) if base is None else np.asarray(base)
    od = A.odot
    acc = np.full(ys.shape, A.one, dtype=np.int32)
    for _ in range(k):
        acc = od[acc, ys]
    return acc


def mv_term(A: MVAlgebra, term, args: Sequence[int]) -> int:
    """Evaluate ``ODOT``, ``(SCALAR, k)`` or ``(POWER, k)`` on carrier indices."""
    if isinstance(term, str):
        kind, k = term, None
    else:
        kind, k = term
    args = [int(a) for a in args]
    for a in args:
        if not 0 <= a < A.size:
            raise InvariantError(f"argument {a} is not a carrier index")
    if kind == ODOT:
        if len(args) != 2:
            raise PreconditionError(f"ODOT takes 2 arguments, got {len(args)}")
        return int(A.odot[args[0], args[1]])
    if kind in (SCALAR, POWER):
        if len(args) != 1:
            raise PreconditionError(f"{kind} takes 1 argument, got {len(args)}")
        if k is None or int(k) < 0:
            raise PreconditionError(f"{kind} needs a nonnegative multiplier, got {k}")
        k = int(k)
        if kind == SCALAR:
            return int(_scalar_all(A, k)[args[0]])
        return int(_power_all(A, k)[args[0]])
    raise PreconditionError(f"unknown term {kind!r}")


def check_mv_axioms(A: MVAlgebra) -> AxiomReport:
    """Exhaustive check of the standard MV axiom set."""
    rep = AxiomReport("MV")
    o, s, z = A.oplus, A.star, A.zero
    x = np.arange(A.size)
    rep.grid("comm", o == o.T, ("x", "y"))
    xx, yy, zz = x[:, None, None], x[None, :, None], x[None, None, :]
    rep.grid("assoc", o[xx, o[yy, zz]] == o[o[xx, yy], zz], ("x", "y", "z"))
    rep.grid("unit", o[x, z] == x, ("x",))
    rep.grid("involution", s[s] == x, ("x",))
    one = s[z]
    rep.grid("absorb", o[x, one] == one, ("x",))
    lhs = o[s[o[s[x][:, None], x[None, :]]], x[None, :]]
    rhs = o[s[o[s[x][None, :], x[:, None]]], x[:, None]]
    rep.grid("lukasiewicz", lhs == rhs, ("x", "y"))
    return rep


def mvn_exponents(n: int) -> list[int]:
    """The j with 1 < j < n that do not divide n."""
    return [j for j in range(2, n) if n % j]


def check_mvn_axioms(A: MVAlgebra, n: int) -> AxiomReport:
    """Both MV_n schemata for every element (and every qualifying j)."""
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    rep = AxiomReport(f"MV_{n}")
    rep.merge(check_mv_axioms(A), "MV.")
    rep.grid("saturation", _scalar_all(A, n + 1) == _scalar_all(A, n), ("x",))
    js = mvn_exponents(n)
    if not js:
        rep.ok("nullity", 0, note="vacuous: no j with 1<j<n and j not dividing n")
    s, o, od = A.star, A.oplus, A.odot
    x = np.arange(A.size)
    for j in js:
        jx, j1x = _scalar_all(A, j), _scalar_all(A, j - 1)
        inner = od[jx, o[s[x], s[j1x]]]
        rep.grid(f"nullity_j{j}", _power_all(A, n, inner) == A.zero, ("x",))
    return rep


def proper_pairs(n: int) -> list[tuple[int, int, int]]:
    """Index triples (i, k, n-i+k-1) for 3<=i<=n-2, 1<=k<=n-4, k<i."""
    out = []
    for i in range(3, n - 1):
        for k in range(1, min(n - 4, i - 1) + 1):
            t = n - i + k - 1
            if not 1 <= t <= n - 1:
                raise InvariantError(f"target index {t} for (i,k)=({i},{k}) leaves [1,{n - 1}]")
            out.append((i, k, t))
    return out


def _fold(i: int, n: int) -> int:
    return min(i, n - i)


def _condition(rep: AxiomReport, n: int, mask, what: str) -> AxiomReport:
    """Record ``mask(i) & mask(k) <= mask(t)`` for every quoted index pair."""
    pairs = proper_pairs(n)
    implied = 0
    for i, k, t in pairs:
        a, b, c = mask(i), mask(k), mask(t)
        sym = _fold(t, n) in (_fold(i, n), _fold(k, n))
        implied += sym
        rep.check(
            f"condition({i},{k})",
            a & b & ~c == 0,
            (i, k),
            ("i", "k"),
            note=f"{what}_{i} & {what}_{k} <= {what}_{t}" + (" (implied by symmetry)" if sym else ""),
        )
    if not pairs:
        status = "vacuous"
    elif implied == len(pairs):
        status = "implied"
    else:
        status = "checked"
    rep.info["status"] = status
    rep.info["pairs"] = [list(p) for p in pairs]
    variant = []
    for i in range(2, n - 1):
        for k in range(1, i):
            variant.append(mask(i) & mask(i - k) & ~mask(i) == 0)
    rep.check(
        "remark_variant",
        all(variant),
        checked=len(variant),
        informational=True,
        note=f"{what}_i & {what}_(i-k) <= {what}_i for 2<=i<=n-2, 1<=k<i",
    )
    return rep


def check_l_proper(obj: IdealSequenceObject | LMAlgebra) -> AxiomReport:
    """Ideal condition deciding properness; an LM algebra is first sent through Lambda."""
    if isinstance(obj, LMAlgebra):
        obj = lambda_functor(as_j(obj))
    rep = AxiomReport("L_PROPER")
    return _condition(rep, obj.n, obj.gen, "I")


def check_somv_condition(x: IdealSequenceObject | FiniteSpaceWithOpens) -> AxiomReport:
    if isinstance(x, IdealSequenceObject):
        return _condition(AxiomReport("BOOL_I_MV"), x.n, x.gen, "I")
    if isinstance(x, FiniteSpaceWithOpens):
        return _condition(AxiomReport("BOOL_SO_MV"), x.n, x.open, "O")
    raise PreconditionError(f"expected an ideal-sequence object or a space, got {type(x).__name__}")


def mutate_mv(A: MVAlgebra, rng) -> MVAlgebra:
    """Change one ``oplus`` entry to a different carrier index."""
    if A.size < 2:
        raise PreconditionError("cannot mutate a one-element carrier")
    x, y = rng.randrange(A.size), rng.randrange(A.size)
    t = A.oplus.copy()
    t[x, y] = (t[x, y] + rng.randrange(1, A.size)) % A.size
    return MVAlgebra(A.size, t, A.star, A.zero, A.names)
