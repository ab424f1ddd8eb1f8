"""Bounded verification suites over generated instances.

Every suite returns one :class:`AxiomReport` with one entry per instance;
an entry records the instance's own report compactly (instances checked,
first failing law and its witness).  Bounds live in :class:`SuiteConfig`,
whose defaults are the desk-scale acceptance bounds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Callable, Iterator

from .boolalg import FiniteBooleanAlgebra, default_atoms
from .construct import (
    IdealSequenceObject,
    build_J,
    build_T,
    check_adjunction,
    check_cat_equivalence,
    check_j_closed_forms,
    lambda_functor,
    sigma_functor,
    symmetric_sequences,
)
from .errors import LMAlgError
from .lm import (
    J_SYSTEM,
    L_ALT,
    L_SYSTEM,
    LMAlgebra,
    as_j,
    as_phi,
    canonical,
    check_axioms,
    j_to_phi,
    moisil_represent,
    mutants,
    phi_to_j,
)
from .mvn import check_l_proper, check_mv_axioms, check_mvn_axioms, check_somv_condition, mv_chain
from .report import AxiomReport
from .stone import check_stone_roundtrip, spaces, theta_a


@dataclass(frozen=True)
class SuiteConfig:
    canonical_n: int = 6
    mutants: int = 100
    tuple_atoms: int = 3
    tuple_n: int = 5
    sigma_atoms: int = 2
    sigma_n: int = 5
    card_atoms: int = 4
    card_n: int = 5
    equiv_atoms: int = 3
    equiv_n: int = 5
    stone_atoms: int = 3
    stone_n: int = 6
    mv_n: int = 6
    proper_atoms: int = 3
    proper_n: int = 7
    arrow_count: int = 3
    seed: int = 0

    @classmethod
    def bounded(cls, max_atoms: int, max_n: int, seed: int = 0, mutants: int = 100) -> SuiteConfig:
        """Same atom bound and same n bound for every suite."""
        return cls(
            canonical_n=max_n,
            mutants=mutants,
            tuple_atoms=max_atoms,
            tuple_n=max_n,
            sigma_atoms=max_atoms,
            sigma_n=max_n,
            card_atoms=max_atoms,
            card_n=max_n,
            equiv_atoms=max_atoms,
            equiv_n=max_n,
            stone_atoms=max_atoms,
            stone_n=max_n,
            mv_n=max_n,
            proper_atoms=max_atoms,
            proper_n=max_n,
            seed=seed,
        )


def _absorb(rep: AxiomReport, label: str, sub: AxiomReport) -> None:
    f = sub.first_failure
    if f is None:
        rep.ok(label, sub.laws_checked)
    else:
        rep.fail(label, f.witness or (), f.variables, sub.laws_checked, note=f"{sub.system}.{f.law} {f.note}".strip())


def _guard(rep: AxiomReport, label: str, fn: Callable[[], AxiomReport]) -> None:
    """Run one instance check; a raised library error counts as a failure."""
    try:
        _absorb(rep, label, fn())
    except LMAlgError as e:
        rep.fail(label, note=f"{type(e).__name__}: {e}")


def bases(max_atoms: int, min_atoms: int = 1) -> Iterator[FiniteBooleanAlgebra]:
    for k in range(min_atoms, max_atoms + 1):
        yield FiniteBooleanAlgebra(default_atoms(k))


def lm_instances(cfg: SuiteConfig) -> Iterator[tuple[str, LMAlgebra]]:
    """Canonical chains, T(B), J(B) and every Sigma(obj) within the configured bounds."""
    for n in range(1, cfg.canonical_n + 1):
        yield f"canonical({n})", canonical(n)
    for B in bases(cfg.tuple_atoms):
        for n in range(1, cfg.tuple_n + 1):
            yield f"T({B.atom_count},{n})", build_T(B, n).algebra
            yield f"J({B.atom_count},{n})", build_J(B, n).algebra
    for B in bases(cfg.sigma_atoms):
        for n in range(1, cfg.sigma_n + 1):
            for obj in symmetric_sequences(B, n):
                yield f"Sigma({B.atom_count},{n},{list(obj.generators)})", sigma_functor(obj).algebra


def suite_axioms(cfg: SuiteConfig) -> AxiomReport:
    """Canonical chains pass every system; every single-entry mutant fails."""
    rep = AxiomReport("axioms")
    for n in range(1, cfg.canonical_n + 1):
        L = canonical(n)
        Lj = phi_to_j(L)
        for system in (L_SYSTEM, L_ALT):
            _guard(rep, f"canonical({n}).{system}", lambda: check_axioms(L, system))
        _guard(rep, f"canonical({n}).{J_SYSTEM}", lambda: check_axioms(Lj, J_SYSTEM))
        caught = {s: 0 for s in (L_SYSTEM, L_ALT, J_SYSTEM)}
        for M, _ in mutants(L, cfg.mutants, cfg.seed + n):
            caught[L_SYSTEM] += not check_axioms(M, L_SYSTEM).passed
            caught[L_ALT] += not check_axioms(M, L_ALT).passed
        for M, _ in mutants(Lj, cfg.mutants, cfg.seed + 100 + n):
            caught[J_SYSTEM] += not check_axioms(M, J_SYSTEM).passed
        for system, c in caught.items():
            rep.check(
                f"canonical({n}).mutants.{system}",
                c == cfg.mutants,
                (c,),
                ("caught",),
                cfg.mutants,
                note=f"{c}/{cfg.mutants} mutants rejected",
            )
    return rep


def _definitions(L: LMAlgebra) -> AxiomReport:
    rep = AxiomReport("DEFINITIONS")
    P = as_phi(L)
    Jv = phi_to_j(P)
    rep.merge(check_axioms(Jv, J_SYSTEM), "to_j.")
    rep.merge(check_axioms(P, L_SYSTEM), "phi.")
    rep.check("phi_j_phi", j_to_phi(Jv).same_tables(P), checked=P.size)
    rep.check("j_phi_j", phi_to_j(j_to_phi(Jv)).same_tables(Jv), checked=P.size)
    return rep


def suite_definitions(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("definitions")
    for label, L in lm_instances(cfg):
        _guard(rep, label, lambda: _definitions(L))
    return rep


def _cardinality(B: FiniteBooleanAlgebra, n: int) -> AxiomReport:
    from .construct import tuple_bijection, MonotoneTuple, DisjointTuple

    rep = AxiomReport("CARDINALITY")
    T, Jb = build_T(B, n, check=False), build_J(B, n, check=False)
    expect = (n + 1) ** B.atom_count
    rep.check("T_size", T.size == expect, (T.size,), ("size",))
    rep.check("J_size", Jb.size == expect, (Jb.size,), ("size",))
    bad = None
    for x, row in enumerate(T.tuples.tolist()):
        g = tuple_bijection("G", MonotoneTuple(B, tuple(row)))
        if tuple_bijection("F", g).entries != tuple(row):
            bad = (x,)
            break
    rep.check("FG_identity", bad is None, bad or (), ("x",), T.size)
    bad = None
    for x, row in enumerate(Jb.tuples.tolist()):
        f = tuple_bijection("F", DisjointTuple(B, tuple(row)))
        if tuple_bijection("G", f).entries != tuple(row):
            bad = (x,)
            break
    rep.check("GF_identity", bad is None, bad or (), ("x",), Jb.size)
    return rep


def suite_cardinality(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("cardinality")
    for B in bases(cfg.card_atoms):
        for n in range(1, cfg.card_n + 1):
            _guard(rep, f"({B.atom_count},{n})", lambda: _cardinality(B, n))
    return rep


def suite_closed_forms(cfg: SuiteConfig) -> AxiomReport:
    """Printed J(B) formulas on every cardinality instance, plus the star discrepancy."""
    rep = AxiomReport("closed_forms")
    for B in bases(cfg.card_atoms):
        for n in range(1, cfg.card_n + 1):
            _guard(rep, f"J({B.atom_count},{n})", lambda: check_j_closed_forms(build_J(B, n, check=False)))
    if cfg.card_atoms >= 2 and cfg.card_n >= 2:
        r = check_j_closed_forms(build_J(FiniteBooleanAlgebra(default_atoms(2)), 2, check=False))
        printed = r.law("star_printed_involution")
        rep.check(
            "printed_star_fails_involution(2,2)",
            not printed.passed,
            printed.witness or (),
            printed.variables,
            note="the printed star formula is expected to break involution here",
        )
    return rep


def suite_adjunction(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("adjunction")
    for label, L in lm_instances(cfg):
        _guard(rep, label, lambda: check_adjunction(L))
    return rep


def equivalence_instances(cfg: SuiteConfig) -> Iterator[tuple[str, LMAlgebra, IdealSequenceObject]]:
    """Each generated LM algebra against Lambda of itself, and each object against Sigma of itself."""
    c = replace(cfg, tuple_atoms=cfg.equiv_atoms, tuple_n=cfg.equiv_n, sigma_atoms=0,
                canonical_n=min(cfg.canonical_n, cfg.equiv_n))
    for label, L in lm_instances(c):
        Lj = as_j(L)
        yield label, Lj, lambda_functor(Lj)
    for B in bases(cfg.equiv_atoms):
        for n in range(1, cfg.equiv_n + 1):
            for obj in symmetric_sequences(B, n):
                yield f"obj({B.atom_count},{n},{list(obj.generators)})", sigma_functor(obj).algebra, obj


def suite_equivalence(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("equivalence")
    for label, L, obj in equivalence_instances(cfg):
        _guard(
            rep,
            label,
            lambda: check_cat_equivalence(L, obj, seed=cfg.seed, arrow_count=cfg.arrow_count),
        )
    return rep


def suite_duality(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("duality")
    for B in bases(cfg.stone_atoms):
        for n in range(1, cfg.stone_n + 1):
            for obj in symmetric_sequences(B, n):
                _guard(rep, f"obj({B.atom_count},{n},{list(obj.generators)})",
                       lambda: check_stone_roundtrip(obj, seed=cfg.seed, arrow_count=cfg.arrow_count))
    for n in range(1, cfg.stone_n + 1):
        for X in spaces(cfg.stone_atoms, n):
            _guard(rep, f"space({X.point_count},{n},{list(X.opens)})",
                   lambda: check_stone_roundtrip(X, seed=cfg.seed, arrow_count=cfg.arrow_count))
    return rep


def _proper_agreement(obj: IdealSequenceObject) -> AxiomReport:
    rep = AxiomReport("PROPER_AGREEMENT")
    a, b = check_l_proper(obj), check_somv_condition(theta_a(obj))
    rep.check("agree", a.passed == b.passed, checked=len(a.results))
    if obj.n <= 5:
        rep.check("small_n_passes", a.passed, checked=len(a.results), note=a.info["status"])
    return rep


def suite_mv(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("mv")
    for n in range(1, cfg.mv_n + 1):
        A = mv_chain(n)
        _guard(rep, f"mv_chain({n}).MV", lambda: check_mv_axioms(A))
        _guard(rep, f"mv_chain({n}).MV_{n}", lambda: check_mvn_axioms(A, n))
        for m in range(1, n):
            r = check_mvn_axioms(A, m)
            f = r.first_failure
            if f is not None:
                rep.info.setdefault("expected_failures", {})[f"mv_chain({n}).rejects_MV_{m}"] = (
                    f.law, dict(zip(f.variables, f.witness or ())))
            rep.check(
                f"mv_chain({n}).rejects_MV_{m}",
                f is not None and f.witness is not None,
                f.witness if f else (),
                f.variables if f else (),
                r.laws_checked,
                note=f"{f.law} fails" if f else "no witness found",
            )
    for B in bases(cfg.proper_atoms):
        for n in range(1, cfg.proper_n + 1):
            if (n + 1) ** B.atom_count > 4096:
                continue
            _guard(rep, f"lambda(J({B.atom_count},{n})).proper",
                   lambda: check_l_proper(lambda_functor(build_J(B, n).algebra)))
    for B in bases(min(cfg.proper_atoms, 2)):
        for n in range(1, cfg.proper_n + 1):
            for obj in symmetric_sequences(B, n):
                _guard(rep, f"obj({B.atom_count},{n},{list(obj.generators)}).agree",
                       lambda: _proper_agreement(obj))
    if cfg.proper_atoms >= 2 and cfg.proper_n >= 6:
        obj = counterexample_object()
        for label, r in (("counterexample.proper", check_l_proper(obj)),
                         ("counterexample.somv", check_somv_condition(theta_a(obj)))):
            f = r.first_failure
            if f is not None:
                rep.info.setdefault("expected_failures", {})[label] = (f.law, dict(zip(f.variables, f.witness)))
            rep.check(label, f is not None and f.witness == (4, 2), f.witness if f else (), ("i", "k"),
                      note="expected failure at (i,k)=(4,2)")
    return rep


def counterexample_object() -> IdealSequenceObject:
    """n=6 over {p,q}: I_2=I_4=ideal of p, I_3=ideal of q, I_1=I_5=0."""
    B = FiniteBooleanAlgebra(("p", "q"))
    p, q = B.element("p"), B.element("q")
    return IdealSequenceObject(B, 6, (0, p, q, p, 0))


def _representation(L: LMAlgebra, tuple_atoms: int | None) -> AxiomReport:
    r = moisil_represent(as_phi(L))
    rep = AxiomReport("REPRESENTATION")
    rep.merge(r.report)
    if tuple_atoms is not None:
        rep.check("isomorphism_onto_power", r.is_isomorphism and len(r.components) == tuple_atoms,
                  checked=L.size)
    return rep


def suite_representation(cfg: SuiteConfig) -> AxiomReport:
    rep = AxiomReport("representation")
    for label, L in lm_instances(cfg):
        k = int(label[2:].split(",")[0]) if label.startswith("T(") else None
        _guard(rep, label, lambda: _representation(L, k))
    return rep


SUITES: dict[str, Callable[[SuiteConfig], AxiomReport]] = {
    "axioms": suite_axioms,
    "definitions": suite_definitions,
    "cardinality": suite_cardinality,
    "closed_forms": suite_closed_forms,
    "adjunction": suite_adjunction,
    "equivalence": suite_equivalence,
    "duality": suite_duality,
    "mv": suite_mv,
    "representation": suite_representation,
}

GROUPS = {
    "all": tuple(SUITES),
    "adjunction": ("adjunction",),
    "equivalence": ("equivalence",),
    "duality": ("duality",),
    "mv": ("mv",),
}


def run_suites(names, cfg: SuiteConfig) -> tuple[AxiomReport, dict[str, float]]:
    """Run the named suites; returns the merged report and per-suite wall time."""
    rep = AxiomReport("verify")
    timings = {}
    for name in names:
        t0 = time.perf_counter()
        sub = SUITES[name](cfg)
        timings[name] = time.perf_counter() - t0
        rep.merge(sub, f"{name}/")
    return rep, timings


def clear_caches() -> None:
    """Drop every memoized construction and verdict (for honest timings)."""
    from . import construct, lm, stone

    lm._cache.clear()
    for fn in (lm.boolean_center, construct._build_T, construct._build_J, construct._sigma,
               construct._lambda, construct.kappa, construct.base_iso, stone.spectrum):
        fn.cache_clear()
