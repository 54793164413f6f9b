"""Print the real zeros of H_0(n, x) to a few decimals, with interlacing checks.

    python scripts/zeros_table.py --n-max 10 --digits 4
"""

import argparse

from hankel_gamma import zeros


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--digits", type=int, default=3)
    ap.add_argument("--mode", choices=("round", "truncate"), default="truncate")
    args = ap.parse_args()
    prev = None
    for n in range(1, args.n_max + 1):
        rep = zeros.isolate_roots(n)
        line = ", ".join(rep.decimals(args.digits, args.mode))
        tag = ""
        if prev is not None:
            tag = "  interlaces" if zeros.interlaces(prev.poly, rep.poly) else "  NOT interlacing"
        print(f"n={n:>2}: {line}{tag}")
        prev = rep


if __name__ == "__main__":
    main()
