"""Finite Stone duality for Boolean algebras carrying symmetric ideal sequences.

A finite Boolean space is discrete, so every point set is clopen and the
spaces here are just labelled point sets with designated open subsets.
Point sets are bitmasks over point indices.  The spectrum of a powerset
algebra lists its ultrafilters in atom order; all correspondences below
are computed through ultrafilter membership rather than read off the
shared encoding.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .boolalg import (
    BooleanHom,
    FiniteBooleanAlgebra,
    Ideal,
    Ultrafilter,
    all_ideals,
    default_atoms,
    ideal_from_set,
    ultrafilters,
    validate_hom,
)
from .construct import BoolIArrow, IdealSequenceObject, sample_object_arrows, validate_arrow
from .errors import InvariantError
from .report import AxiomReport


@dataclass(frozen=True)
class FiniteSpaceWithOpens:
    """Points with designated opens O_1..O_{n-1}; ``opens[i-1]`` is the bitmask of O_i."""

    point_names: tuple[str, ...]
    n: int
    opens: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "point_names", tuple(str(p) for p in self.point_names))
        object.__setattr__(self, "opens", tuple(int(o) for o in self.opens))
        if len(set(self.point_names)) != len(self.point_names):
            raise InvariantError("duplicate point labels")
        if self.n < 1:
            raise InvariantError(f"n must be at least 1, got {self.n}")
        if len(self.opens) != self.n - 1:
            raise InvariantError(f"expected {self.n - 1} open sets, got {len(self.opens)}")
        full = (1 << len(self.point_names)) - 1
        for o in self.opens:
            if o < 0 or o & ~full:
                raise InvariantError(f"open set {o} mentions points outside the space")
        for i in range(1, self.n):
            if self.open(i) != self.open(self.n - i):
                raise InvariantError(f"opens are not symmetric: O_{i} != O_{self.n - i}")

    @property
    def point_count(self) -> int:
        return len(self.point_names)

    @property
    def all_points(self) -> int:
        return (1 << self.point_count) - 1

    def open(self, i: int) -> int:
        return self.opens[i - 1]

    def points_of(self, mask: int) -> list[int]:
        return [p for p in range(self.point_count) if mask >> p & 1]


@dataclass(frozen=True)
class SpaceMorphism:
    """A point map with f^{-1}(U_i) contained in O_i; ``table[p]`` is the image of point ``p``."""

    source: FiniteSpaceWithOpens
    target: FiniteSpaceWithOpens
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.source.point_count or any(
            not 0 <= v < self.target.point_count for v in self.table
        ):
            raise InvariantError("point map is not total into the target")

    def preimage(self, mask: int) -> int:
        return sum(1 << p for p, q in enumerate(self.table) if mask >> q & 1)

    def compose(self, first: SpaceMorphism) -> SpaceMorphism:
        return SpaceMorphism(first.source, self.target, tuple(self.table[v] for v in first.table))


def validate_space_morphism(f: SpaceMorphism) -> AxiomReport:
    rep = AxiomReport("SPACE_MORPHISM")
    if f.source.n != f.target.n:
        rep.fail("same_n")
        return rep
    for i in range(1, f.source.n):
        pre = f.preimage(f.target.open(i))
        rep.check(f"preimage_{i}", pre & ~f.source.open(i) == 0, (i,), ("i",))
    return rep


@dataclass(frozen=True)
class Spectrum:
    algebra: FiniteBooleanAlgebra
    points: tuple[Ultrafilter, ...]
    space: FiniteSpaceWithOpens

    def n_of_element(self, b: int) -> int:
        """N_b: the ultrafilters containing ``b``."""
        return sum(1 << p for p, U in enumerate(self.points) if b in U)


@lru_cache(maxsize=256)
def spectrum(B: FiniteBooleanAlgebra) -> Spectrum:
    """Ultrafilters of ``B`` as a space without designated opens."""
    us = tuple(ultrafilters(B))
    space = FiniteSpaceWithOpens(tuple(B.atom_names[U.index] for U in us), 1, ())
    return Spectrum(B, us, space)


def clopen_algebra(X: FiniteSpaceWithOpens) -> FiniteBooleanAlgebra:
    return FiniteBooleanAlgebra(X.point_names)


def n_of_ideal(B: FiniteBooleanAlgebra, I: Ideal) -> int:
    """N_I: the union of N_a over the members of ``I``."""
    sp = spectrum(B)
    out = 0
    for a in I.members():
        out |= sp.n_of_element(a)
    return out


def ideal_of_open(X: FiniteSpaceWithOpens, O: int) -> Ideal:
    """I_O: clopens whose basic set lies inside ``O``."""
    if O & ~X.all_points:
        raise InvariantError("open set mentions points outside the space")
    C = clopen_algebra(X)
    sp = spectrum(C) if C.atom_count else None
    members = [b for b in C.elements() if sp is None or sp.n_of_element(b) & ~O == 0]
    return ideal_from_set(C, members)


def theta_a(obj: IdealSequenceObject) -> FiniteSpaceWithOpens:
    """Spectrum of the base with O_i = N_{I_i}."""
    sp = spectrum(obj.base)
    opens = tuple(n_of_ideal(obj.base, obj.ideal(i)) for i in range(1, obj.n))
    return FiniteSpaceWithOpens(sp.space.point_names, obj.n, opens)


def theta_t(X: FiniteSpaceWithOpens) -> IdealSequenceObject:
    """Clopen algebra with I_i = I_{O_i}."""
    C = clopen_algebra(X)
    gens = tuple(ideal_of_open(X, X.open(i)).generator for i in range(1, X.n))
    return IdealSequenceObject(C, X.n, gens)


def _ultrafilter_preimage(g: BooleanHom, U: Ultrafilter) -> Ultrafilter:
    members = [a for a in g.source.elements() if g(a) in U]
    least = g.source.meet_all(members)
    V = Ultrafilter(g.source, least)
    if set(members) != {a for a in g.source.elements() if a in V}:
        raise InvariantError("preimage of an ultrafilter is not principal at an atom")
    return V


def dual_morphism(direction: str, arrow: BoolIArrow | SpaceMorphism) -> SpaceMorphism | BoolIArrow:
    """``A``: an arrow g of objects becomes u -> g^{-1}(u) between spectra, reversed.
    ``T``: a point map f becomes N -> f^{-1}(N) between clopen algebras, reversed.
    """
    if direction == "A":
        if not isinstance(arrow, BoolIArrow):
            raise InvariantError("direction A expects an arrow of ideal-sequence objects")
        rep = validate_arrow(arrow)
        if not rep.passed:
            raise InvariantError(f"invalid arrow: {rep.first_failure.law}")
        g = arrow.hom
        sp_src = spectrum(g.source)
        sp_tgt = spectrum(g.target)
        table = tuple(sp_src.points.index(_ultrafilter_preimage(g, U)) for U in sp_tgt.points)
        f = SpaceMorphism(theta_a(arrow.target), theta_a(arrow.source), table)
        validate_space_morphism(f).require("dual arrow")
        return f
    if direction == "T":
        if not isinstance(arrow, SpaceMorphism):
            raise InvariantError("direction T expects a space morphism")
        rep = validate_space_morphism(arrow)
        if not rep.passed:
            raise InvariantError(f"invalid space morphism: {rep.first_failure.law}")
        src, tgt = theta_t(arrow.target), theta_t(arrow.source)
        h = BooleanHom(src.base, tgt.base, tuple(arrow.preimage(N) for N in src.base.elements()))
        a = BoolIArrow(src, tgt, h)
        validate_arrow(a).require("dual arrow")
        return a
    raise ValueError(f"direction must be 'A' or 'T', got {direction!r}")


# ---------------------------------------------------------------------------
# verification


def sample_space_arrows(X: FiniteSpaceWithOpens, count: int, seed: int = 0) -> list[SpaceMorphism]:
    """Identity plus point maps into fresh spaces given the largest opens allowed."""
    rng = random.Random(seed)
    out = [SpaceMorphism(X, X, tuple(range(X.point_count)))]
    for _ in range(count):
        k = rng.randint(1, max(1, X.point_count))
        table = tuple(rng.randrange(k) for _ in range(X.point_count))
        opens = []
        for i in range(1, X.n):
            U = 0
            for y in range(k):
                pre = sum(1 << p for p, q in enumerate(table) if q == y)
                if pre & ~X.open(i) == 0:
                    U |= 1 << y
            opens.append(U)
        Y = FiniteSpaceWithOpens(default_atoms(k), X.n, tuple(opens))
        out.append(SpaceMorphism(X, Y, table))
    return out


def _element_iso(B: FiniteBooleanAlgebra) -> BooleanHom:
    """b -> N_b onto the clopen algebra of the spectrum."""
    sp = spectrum(B)
    return BooleanHom(B, clopen_algebra(sp.space), tuple(sp.n_of_element(b) for b in B.elements()))


def _point_iso(X: FiniteSpaceWithOpens) -> tuple[int, ...]:
    """Point p -> index of its principal ultrafilter in the spectrum of the clopens."""
    C = clopen_algebra(X)
    sp = spectrum(C)
    out = []
    for p in range(X.point_count):
        members = {b for b in C.elements() if b >> p & 1}
        out.append(next(i for i, U in enumerate(sp.points) if {b for b in C.elements() if b in U} == members))
    return tuple(out)


def _check_object(obj: IdealSequenceObject, rep: AxiomReport, arrows: Sequence[BoolIArrow]) -> None:
    B = obj.base
    sp = spectrum(B)
    iso = _element_iso(B)
    rep.merge(validate_hom(iso), "n_b.")
    rep.check("n_b.bijective", iso.is_bijective(), checked=B.size)
    pts = [next(p for p in range(len(sp.points)) if sp.n_of_element(U.atom) == 1 << p) for U in sp.points]
    rep.check("points_bijective", sorted(pts) == list(range(len(sp.points))), checked=len(pts))
    witness = None
    for I in all_ideals(B):
        NI = n_of_ideal(B, I)
        for b in B.elements():
            if (b in I) != (sp.n_of_element(b) & ~NI == 0):
                witness = witness or (b, I.generator)
    rep.check("membership", witness is None, witness or (), ("b", "gen"), B.size * B.size)
    bad = next((I.generator for I in all_ideals(B) if ideal_of_open(sp.space, n_of_ideal(B, I)).generator != iso(I.generator)), None)
    rep.check("ideal_open_ideal", bad is None, () if bad is None else (bad,), ("gen",), B.size)
    X = theta_a(obj)
    for i in range(1, obj.n):
        rep.check(f"index_binding_{i}", X.open(i) == n_of_ideal(B, obj.ideal(obj.n - i)), (i,), ("i",),
                  note="reversed display order gives the same opens")
    back = theta_t(X)
    for i in range(1, obj.n):
        rep.check(f"roundtrip_ideal_{i}", iso(obj.gen(i)) == back.gen(i), (i,), ("i",))
    for a, g in enumerate(arrows):
        rep.merge(validate_arrow(g), f"arrow{a}.")
        twice = dual_morphism("T", dual_morphism("A", g))
        src = g.source.base
        lhs = [twice.hom(_element_iso(src)(b)) for b in src.elements()]
        rhs = [_element_iso(g.target.base)(g.hom(b)) for b in src.elements()]
        rep.check(f"natural{a}", lhs == rhs, checked=src.size)
    for a, (g1, g2) in enumerate(zip(arrows, arrows[1:])):
        if g2.source != g1.target:
            continue
        comp = g2.compose(g1)
        lhs = dual_morphism("A", comp)
        rhs = dual_morphism("A", g1).compose(dual_morphism("A", g2))
        rep.check(f"contravariant{a}", lhs.table == rhs.table)


def _check_space(X: FiniteSpaceWithOpens, rep: AxiomReport, arrows: Sequence[SpaceMorphism]) -> None:
    C = clopen_algebra(X)
    pts = _point_iso(X)
    rep.check("points_bijective", sorted(pts) == list(range(X.point_count)), checked=X.point_count)
    iso = _element_iso(C)
    rep.merge(validate_hom(iso), "n_b.")
    rep.check("n_b.bijective", iso.is_bijective(), checked=C.size)
    bad = next((O for O in range(X.all_points + 1) if n_of_ideal(C, ideal_of_open(X, O)) != O), None)
    rep.check("open_ideal_open", bad is None, () if bad is None else (bad,), ("O",), X.all_points + 1)
    obj = theta_t(X)
    Y = theta_a(obj)
    for i in range(1, X.n):
        moved = sum(1 << pts[p] for p in X.points_of(X.open(i)))
        rep.check(f"roundtrip_open_{i}", moved == Y.open(i), (i,), ("i",))
        rep.check(f"index_binding_{i}", Y.open(i) == n_of_ideal(obj.base, obj.ideal(X.n - i)), (i,), ("i",),
                  note="reversed display order gives the same opens")
    for a, f in enumerate(arrows):
        rep.merge(validate_space_morphism(f), f"arrow{a}.")
        twice = dual_morphism("A", dual_morphism("T", f))
        qts = _point_iso(f.target)
        lhs = [twice.table[pts[p]] for p in range(X.point_count)]
        rhs = [qts[f.table[p]] for p in range(X.point_count)]
        rep.check(f"natural{a}", lhs == rhs, checked=X.point_count)
        g = dual_morphism("T", f)
        rep.check(f"dual_ideals{a}", validate_arrow(g).passed)


def check_stone_roundtrip(
    x: IdealSequenceObject | FiniteSpaceWithOpens,
    arrows: Sequence | None = None,
    seed: int = 0,
    arrow_count: int = 3,
) -> AxiomReport:
    """Exhaustive check of the finite duality around one object or one space."""
    rep = AxiomReport("STONE")
    if isinstance(x, IdealSequenceObject):
        if x.base.atom_count == 0:
            raise InvariantError("the trivial Boolean algebra has an empty spectrum")
        if arrows is None:
            arrows = [a for a in sample_object_arrows(x, arrow_count, seed)]
            arrows += _composable(arrows, seed)
        _check_object(x, rep, arrows)
    elif isinstance(x, FiniteSpaceWithOpens):
        if x.point_count == 0:
            raise InvariantError("the empty space has the trivial clopen algebra")
        if arrows is None:
            arrows = sample_space_arrows(x, arrow_count, seed)
        _check_space(x, rep, arrows)
    else:
        raise TypeError(f"cannot check {type(x).__name__}")
    return rep


def _composable(arrows: list[BoolIArrow], seed: int) -> list[BoolIArrow]:
    """A follow-up arrow out of the last target, so composites get exercised."""
    last = arrows[-1]
    if last.target.base.atom_count == 0:
        return []
    return sample_object_arrows(last.target, 1, seed + 1)[1:]


def spaces(max_points: int, n: int) -> list[FiniteSpaceWithOpens]:
    """Every space with 1..max_points points and symmetric opens."""
    out = []
    for k in range(1, max_points + 1):
        pts = default_atoms(k)
        free = list(range(1, n // 2 + 1))
        for choice in itertools.product(range(1 << k), repeat=len(free)):
            opens = [0] * (n - 1)
            for i, o in zip(free, choice):
                opens[i - 1] = opens[n - i - 1] = o
            out.append(FiniteSpaceWithOpens(pts, n, tuple(opens)))
    return out
