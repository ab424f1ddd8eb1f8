"""Compare the transported star on J(B) with the printed closed form.

Prints, for small atom counts and n, how many elements agree with the
printed form and whether applying the printed form twice is the identity.
"""

import argparse

from lmalg.boolalg import FiniteBooleanAlgebra, default_atoms
from lmalg.construct import build_J, check_j_closed_forms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-atoms", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'atoms':>5} {'n':>3} {'size':>6}  transported  printed-agrees  printed-involution  first bad y")
    for k in range(1, args.max_atoms + 1):
        B = FiniteBooleanAlgebra(default_atoms(k))
        for n in range(1, args.max_n + 1):
            JB = build_J(B, n)
            r = check_j_closed_forms(JB)
            pf, pi = r.law("star_printed_form"), r.law("star_printed_involution")
            bad = JB.algebra.render(pi.witness[0]) if pi.witness else "-"
            agree = "yes" if pf.passed else "no"
            inv = "yes" if pi.passed else "no"
            ok = "ok" if r.law("star_transported_form").passed else "MISMATCH"
            print(f"{k:>5} {n:>3} {JB.size:>6}  {ok:<11}  {agree:<14}  {inv:<18}  {bad}")


if __name__ == "__main__":
    main()
