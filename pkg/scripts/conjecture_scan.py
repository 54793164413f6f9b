"""Scan F(n, r) into a JSON-lines store, export CSV, and report each pattern.

    python scripts/conjecture_scan.py --n-max 60 --r-max 9 --out scan.jsonl
"""

import argparse
from pathlib import Path

from hankel_gamma import conjectures as cj


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=60)
    ap.add_argument("--r-max", type=int, default=9)
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--out", type=Path, default=Path("scan.jsonl"))
    args = ap.parse_args()
    added = cj.scan(args.n_max, args.r_max, args.out)
    cj.export_csv(args.out, args.out.with_suffix(".csv"))
    print(f"{added} new values in {args.out}")
    for pid in cj.PatternId:
        rep = cj.verify_pattern(pid, args.m_max)
        state = "proven" if rep.proven else ("holds" if rep.passed else "MISMATCH")
        print(f"{pid.value:<13} {state:<9} {len(rep.rows) - len(rep.mismatches)}/{len(rep.rows)}")
        for row in rep.mismatches[:3]:
            print(f"    {row['case']} m={row['m']} n={row['n']}: expected {row['expected']}, got {row['actual']}")


if __name__ == "__main__":
    main()
