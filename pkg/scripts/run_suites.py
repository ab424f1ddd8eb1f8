"""Run every verification suite and print a per-suite summary table.

    python3 scripts/run_suites.py                      # acceptance bounds
    python3 scripts/run_suites.py --max-atoms 2 --max-n 4
    python3 scripts/run_suites.py --json results.json
"""

import argparse
import json
import time

from lmalg.suites import SUITES, SuiteConfig, clear_caches


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-atoms", type=int, default=None)
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=sorted(SUITES), default=None)
    ap.add_argument("--json", default=None, help="also write the per-suite results here")
    args = ap.parse_args()

    if args.max_atoms is None and args.max_n is None:
        cfg = SuiteConfig(seed=args.seed)
    else:
        cfg = SuiteConfig.bounded(args.max_atoms or 3, args.max_n or 5, args.seed)

    rows = []
    print(f"{'suite':<16}{'verdict':<9}{'instances':>10}{'law checks':>14}{'seconds':>10}")
    for name in args.only or SUITES:
        clear_caches()
        t0 = time.perf_counter()
        rep = SUITES[name](cfg)
        secs = time.perf_counter() - t0
        verdict = "pass" if rep.passed else "FAIL"
        rows.append({"suite": name, "passed": rep.passed, "instances": len(rep.results),
                     "laws_checked": rep.laws_checked, "seconds": round(secs, 3)})
        print(f"{name:<16}{verdict:<9}{len(rep.results):>10}{rep.laws_checked:>14}{secs:>10.2f}")
        for f in rep.failures[:5]:
            print(f"    {f.law}: {f.note} witness={f.witness}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
