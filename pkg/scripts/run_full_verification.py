"""Run every verification suite and write a JSON-lines log.

    python scripts/run_full_verification.py --out verify.jsonl [--quick]
"""

import argparse
import sys

from hankel_gamma.cli import Writer, verify_all
from hankel_gamma.config import VerifyConfig


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="verify.jsonl")
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    cfg = VerifyConfig.quick() if args.quick else VerifyConfig()
    with open(args.out, "w") as fh:
        ok = verify_all(Writer("json", fh), cfg)
    print(f"{'all suites pass' if ok else 'FAILURES'}; log in {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
