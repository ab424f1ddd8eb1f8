"""Finite Boolean algebras as powersets of a named atom set.

An element is an unsigned integer whose bit ``i`` is set iff atom ``i``
belongs to the subset.  Every ideal of a finite Boolean algebra is
principal, so ideals are stored by their generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BoundError, InvariantError
from .report import AxiomReport

MAX_ATOMS = 16


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, ``mask`` itself first and 0 last."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@dataclass(frozen=True)
class FiniteBooleanAlgebra:
    atom_names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atom_names", tuple(str(a) for a in self.atom_names))
        if len(set(self.atom_names)) != len(self.atom_names):
            raise InvariantError(f"duplicate atom labels in {list(self.atom_names)}")

    @property
    def atom_count(self) -> int:
        return len(self.atom_names)

    @property
    def size(self) -> int:
        return 1 << self.atom_count

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.atom_count))

    def elements(self) -> range:
        return range(self.size)

    def contains(self, a: int) -> bool:
        return isinstance(a, int) and 0 <= a < self.size

    def require(self, a: int) -> int:
        if not self.contains(a):
            raise InvariantError(f"element {a!r} out of range for algebra with {self.atom_count} atoms")
        return a

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return a & b

    def complement(self, a: int) -> int:
        return self.top ^ a

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    def join_all(self, elems: Iterable[int]) -> int:
        out = 0
        for e in elems:
            out |= e
        return out

    def meet_all(self, elems: Iterable[int]) -> int:
        out = self.top
        for e in elems:
            out &= e
        return out

    def atoms_of(self, a: int) -> list[int]:
        """Atom indices below ``a``."""
        return [i for i in range(self.atom_count) if a >> i & 1]

    def element(self, names: Iterable[str]) -> int:
        idx = {n: i for i, n in enumerate(self.atom_names)}
        out = 0
        for n in names:
            out |= 1 << idx[n]
        return out

    def render(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == self.top:
            return "1"
        return "|".join(self.atom_names[i] for i in self.atoms_of(a))


def mk_powerset_algebra(atom_names: Sequence[str], max_atoms: int = MAX_ATOMS) -> FiniteBooleanAlgebra:
    if len(atom_names) > max_atoms:
        raise BoundError(f"{len(atom_names)} atoms exceeds the bound {max_atoms}")
    return FiniteBooleanAlgebra(tuple(atom_names))


def default_atoms(k: int) -> tuple[str, ...]:
    """Labels p, q, r, s, ... for small atom counts."""
    base = "pqrstuvw"
    if k <= len(base):
        return tuple(base[:k])
    return tuple(f"a{i}" for i in range(k))


@dataclass(frozen=True)
class Ideal:
    parent: FiniteBooleanAlgebra
    generator: int

    def __post_init__(self) -> None:
        self.parent.require(self.generator)

    def __contains__(self, b: int) -> bool:
        return self.parent.leq(b, self.generator)

    def members(self) -> list[int]:
        return sorted(submasks(self.generator))

    def __len__(self) -> int:
        return 1 << bin(self.generator).count("1")

    def __le__(self, other: Ideal) -> bool:
        return self.parent.leq(self.generator, other.generator)

    def meet(self, other: Ideal) -> Ideal:
        return Ideal(self.parent, self.generator & other.generator)


def ideal_from_generator(B: FiniteBooleanAlgebra, a: int) -> Ideal:
    return Ideal(B, B.require(a))


def all_ideals(B: FiniteBooleanAlgebra) -> list[Ideal]:
    return [Ideal(B, g) for g in B.elements()]


def check_ideal(B: FiniteBooleanAlgebra, S: Iterable[int]) -> AxiomReport:
    """Check an explicit element set against the ideal laws.

    On a pass, ``report.info["generator"]`` holds the join of the set.
    """
    S = set(S)
    rep = AxiomReport("IDEAL")
    bad = sorted(s for s in S if not B.contains(s))
    if not rep.check("in_carrier", not bad, bad[:1], ("b",), len(S)):
        return rep
    rep.check("zero", 0 in S, (), (), 1)
    witness = None
    checked = 0
    for s in sorted(S):
        for b in submasks(s):
            checked += 1
            if b not in S:
                witness = (s, b)
                break
        if witness:
            break
    rep.check("down_closed", witness is None, witness or (), ("s", "b"), checked)
    witness = None
    checked = 0
    for s, t in combinations(sorted(S), 2):
        checked += 1
        if s | t not in S:
            witness = (s, t)
            break
    rep.check("join_closed", witness is None, witness or (), ("s", "t"), checked)
    if rep.passed:
        rep.info["generator"] = B.join_all(S)
    return rep


def ideal_from_set(B: FiniteBooleanAlgebra, S: Iterable[int]) -> Ideal:
    """Normalize an explicit ideal to its generator; raises if ``S`` is not an ideal."""
    rep = check_ideal(B, S)
    if not rep.passed:
        f = rep.first_failure
        raise InvariantError(f"not an ideal: {f.law} fails at {f.witness}")
    return Ideal(B, rep.info["generator"])


@dataclass(frozen=True)
class Ultrafilter:
    parent: FiniteBooleanAlgebra
    atom: int

    def __post_init__(self) -> None:
        a = self.atom
        if not (self.parent.contains(a) and a != 0 and a & (a - 1) == 0):
            raise InvariantError(f"{a!r} is not an atom of the algebra")

    def __contains__(self, b: int) -> bool:
        return self.parent.leq(self.atom, b)

    @property
    def index(self) -> int:
        return self.atom.bit_length() - 1


def ultrafilters(B: FiniteBooleanAlgebra) -> list[Ultrafilter]:
    if B.atom_count == 0:
        raise InvariantError("the trivial Boolean algebra has no ultrafilters")
    return [Ultrafilter(B, a) for a in B.atoms]


@dataclass(frozen=True)
class BooleanHom:
    source: FiniteBooleanAlgebra
    target: FiniteBooleanAlgebra
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.source.size:
            raise InvariantError(f"map has {len(self.table)} entries, source has {self.source.size} elements")
        for v in self.table:
            self.target.require(v)

    def __call__(self, a: int) -> int:
        return self.table[a]

    @classmethod
    def from_mapping(cls, source, target, m: Mapping[int, int]) -> BooleanHom:
        return cls(source, target, tuple(m[a] for a in source.elements()))

    @classmethod
    def identity(cls, B: FiniteBooleanAlgebra) -> BooleanHom:
        return cls(B, B, tuple(B.elements()))

    def compose(self, first: BooleanHom) -> BooleanHom:
        """``self`` after ``first``."""
        return BooleanHom(first.source, self.target, tuple(self.table[v] for v in first.table))

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.table)) == len(self.table)

    def inverse(self) -> BooleanHom:
        if not self.is_bijective():
            raise InvariantError("map is not bijective")
        inv = [0] * self.source.size
        for a, b in enumerate(self.table):
            inv[b] = a
        return BooleanHom(self.target, self.source, tuple(inv))


def validate_hom(h: BooleanHom) -> AxiomReport:
    """Exhaustively check that ``h`` preserves 0, 1, join, meet and complement."""
    A, B, t = h.source, h.target, h.table
    rep = AxiomReport("BOOL_HOM")
    rep.check("zero", t[0] == 0, (0,), ("a",))
    rep.check("one", t[A.top] == B.top, (A.top,), ("a",))
    for law, op_a, op_b in (
        ("join", A.join, B.join),
        ("meet", A.meet, B.meet),
    ):
        witness = next(
            ((a, b) for a in A.elements() for b in A.elements() if t[op_a(a, b)] != op_b(t[a], t[b])), None
        )
        rep.check(law, witness is None, witness or (), ("a", "b"), A.size * A.size)
    witness = next((a for a in A.elements() if t[A.complement(a)] != B.complement(t[a])), None)
    rep.check("complement", witness is None, () if witness is None else (witness,), ("a",), A.size)
    return rep


def hom_from_atom_map(A: FiniteBooleanAlgebra, B: FiniteBooleanAlgebra, m: Sequence[int]) -> BooleanHom:
    """Boolean hom ``A -> B`` dual to an atom map ``atoms(B) -> atoms(A)``.

    ``m[beta]`` is the index of the atom of ``A`` assigned to atom ``beta``
    of ``B``; ``h(a)`` collects the atoms ``beta`` with ``m(beta) <= a``.
    """
    if len(m) != B.atom_count or any(not 0 <= v < A.atom_count for v in m):
        raise InvariantError(f"atom map {list(m)} is not total from {B.atom_count} to {A.atom_count} atoms")
    table = []
    for a in A.elements():
        h = 0
        for beta, alpha in enumerate(m):
            if a >> alpha & 1:
                h |= 1 << beta
        table.append(h)
    return BooleanHom(A, B, tuple(table))


def ultrafilter_hom(U: Ultrafilter) -> BooleanHom:
    """Characteristic map of ``U`` onto the two-element algebra."""
    two = FiniteBooleanAlgebra(("*",))
    return BooleanHom(U.parent, two, tuple(1 if b in U else 0 for b in U.parent.elements()))
