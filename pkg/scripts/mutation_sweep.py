"""How sharp are the axiom checkers?  Kill rates of single-entry mutants.

For each n and each axiom system this perturbs one table entry of the
canonical chain (or of T(B)/J(B) with --atoms) many times and counts how
often the checker rejects the mutant, broken down by which table was hit
and by which law fired first.
"""

import argparse
from collections import Counter, defaultdict

from lmalg.boolalg import FiniteBooleanAlgebra, default_atoms
from lmalg.construct import build_J, build_T
from lmalg.lm import J_SYSTEM, L_ALT, L_SYSTEM, canonical, check_axioms, mutants, phi_to_j


def base_algebra(n, atoms, kind):
    if atoms == 0:
        L = canonical(n)
        return L if kind == "phi" else phi_to_j(L)
    B = FiniteBooleanAlgebra(default_atoms(atoms))
    return (build_T(B, n) if kind == "phi" else build_J(B, n)).algebra


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--atoms", type=int, default=0, help="0 = canonical chain, k = T/J over k atoms")
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>3} {'system':<10} {'killed':>8}  first law (top 3)        by table")
    for n in range(1, args.max_n + 1):
        for system, kind in ((L_SYSTEM, "phi"), (L_ALT, "phi"), (J_SYSTEM, "j")):
            L = base_algebra(n, args.atoms, kind)
            killed, first, tables = 0, Counter(), defaultdict(lambda: [0, 0])
            for M, what in mutants(L, args.count, args.seed + n):
                r = check_axioms(M, system)
                table = what.split("[")[0]
                tables[table][1] += 1
                if not r.passed:
                    killed += 1
                    tables[table][0] += 1
                    first[r.first_failure.law] += 1
            top = ", ".join(f"{k}:{v}" for k, v in first.most_common(3))
            by_table = " ".join(f"{t}={a}/{b}" for t, (a, b) in sorted(tables.items()))
            print(f"{n:>3} {system:<10} {killed:>4}/{args.count:<4} {top:<26} {by_table}")


if __name__ == "__main__":
    main()
