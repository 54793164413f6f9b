"""hankel-gamma: command-line front end for every verification suite.

Exit status: 0 all checks pass, 1 a verification failed, 2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .config import VerifyConfig
from .errors import HankelGammaError, IoFailure, MismatchReport
from .exact import parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Writer:
    """Serializes records to stdout as JSON lines, CSV or plain text."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv_fields = None

    def emit(self, record: dict, human: str | None = None):
        if self.fmt == "json":
            self.stream.write(json.dumps(record, default=str) + "\n")
        elif self.fmt == "csv":
            flat = {k: (json.dumps(v, default=str) if isinstance(v, (dict, list)) else v) for k, v in record.items()}
            if self._csv_fields is None:
                self._csv_fields = list(flat)
                csv.writer(self.stream).writerow(self._csv_fields)
            csv.writer(self.stream).writerow([flat.get(k, "") for k in self._csv_fields])
        else:
            if human is None:
                human = "  ".join(f"{k}={v}" for k, v in record.items() if not isinstance(v, (dict, list)))
            self.stream.write(human + "\n")
        self.stream.flush()


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# -- subcommands --------------------------------------------------------------------------


def cmd_det(args, out: Writer) -> bool:
    from .hankel import FAMILY_22, FamilySpec, Partition, shifted_hankel_det

    spec = FamilySpec(args.beta, args.alpha) if (args.beta, args.alpha) != (2, 2) else FAMILY_22
    lam = Partition.parse(args.lam)
    p = shifted_hankel_det(spec, args.n, lam.parts, args.engine)
    out.emit(
        {"n": args.n, "lambda": str(lam), "family": [spec.beta, spec.alpha], "poly": str(p), "coeffs": p.to_json()["coeffs"]},
        human=f"H_{lam}({args.n}, x) = {p}",
    )
    return True


def _table_task(job):
    from .gamma import verify_table
    from .gamma_tables import row

    row_id, n, trials, seed = job
    return verify_table(row(row_id), n=n, trials=trials, seed=seed, strict=False)


def run_tables(row_ids, ns, trials, seed=0):
    from .parallel import pmap

    jobs = [(rid, n, trials, seed) for n in ns for rid in row_ids]
    return pmap(_table_task, jobs)


def cmd_gamma_table(args, out: Writer) -> bool:
    from .gamma_tables import ALL_ROWS, TABLES

    if args.row:
        if args.row not in ALL_ROWS:
            raise UsageError(f"unknown row {args.row}")
        ids = [args.row]
    elif args.table == "all":
        ids = list(ALL_ROWS)
    else:
        t = int(args.table)
        if t not in TABLES:
            raise UsageError(f"unknown table {args.table}")
        ids = [e.row_id for e in TABLES[t]]
    ok = True
    for rep in run_tables(ids, [args.n], args.random_symbols, args.seed):
        ok &= rep.passed
        d = rep.to_json()
        out.emit(d, human=f"{rep.row_id}  n={rep.n}  {rep.mode}  {rep.status}")
    return ok


def cmd_identities(args, out: Writer) -> bool:
    from .identities import all_residuals, kernel_membership_check

    if args.n_min < 0 or args.n_max < args.n_min:
        raise UsageError("need 0 <= --n-min <= --n-max")
    ok = True
    for n in range(args.n_min, args.n_max + 1):
        for res in all_residuals(n):
            ok &= res.passed
            d = res.to_json()
            if res.passed:
                d.pop("residual")
            out.emit(d, human=f"n={n}  {res.name}  {_status(res.passed)}")
        kern = kernel_membership_check(n)
        ok &= kern
        out.emit({"n": n, "name": "TI_KERNEL", "status": _status(kern)}, human=f"n={n}  TI_KERNEL  {_status(kern)}")
    return ok


def cmd_closed_form(args, out: Writer) -> bool:
    from . import closedform as cf

    if args.action == "eval":
        if args.x is None or args.n is None:
            raise UsageError("closed-form eval needs --n and --x")
        x0 = parse_rational(args.x)
        d = cf.evaluate(args.n, x0)
        out.emit(d, human=d["determinant"])
        ok = all(v == d["determinant"] for k, v in d.items() if k not in ("n", "x", "determinant"))
        return ok
    ok = True
    for d in cf.verify_closed_forms(args.n_max):
        ok &= d["status"] == "pass"
        out.emit(d, human=f"{d['id']}  n={d['n']}  {d['status']}")
    return ok


def cmd_zeros(args, out: Writer) -> bool:
    from .exact import format_rational
    from .zeros import isolate_roots

    width = parse_rational(args.width)
    rep = isolate_roots(args.n, width)
    for iv, dec in zip(rep.isolating_intervals, rep.decimals(args.digits, args.mode)):
        out.emit(
            {"n": args.n, "root": dec, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi)},
            human=f"{dec}  [{format_rational(iv.lo)}, {format_rational(iv.hi)}]",
        )
    return len(rep.isolating_intervals) == args.n


def cmd_scan(args, out: Writer) -> bool:
    from . import conjectures as cj
    from .parallel import worker_count

    if args.scan_action == "export":
        count = cj.export_csv(args.input, args.csv)
        out.emit({"exported": count, "csv": args.csv}, human=f"wrote {count} records to {args.csv}")
        return True
    if args.n_max is None or args.r_max is None or args.out is None:
        raise UsageError("scan needs --n-max, --r-max and --out")
    count = cj.scan(args.n_max, args.r_max, args.out, worker_count())
    out.emit({"records": count, "out": args.out}, human=f"wrote {count} records to {args.out}")
    return True


def verify_all(out: Writer, config: VerifyConfig | None = None) -> bool:
    """Every suite at the bounds in `config`; VerifyConfig.quick() fits in a few seconds."""
    from . import closedform as cf
    from . import conjectures as cj
    from . import identities as ident
    from . import zeros
    from .gamma_tables import ALL_ROWS
    from .hankel import FAMILY_22, shifted_hankel_det

    cfg = config or VerifyConfig()
    results: list[tuple[str, bool, float]] = []

    def suite(name, fn):
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
        except MismatchReport as exc:
            out.emit({"suite": name, "status": "fail", "detail": str(exc)})
            ok = False
        dt = time.perf_counter() - t0
        results.append((name, ok, dt))
        out.emit({"suite": name, "status": _status(ok), "seconds": round(dt, 3)}, human=f"{name:<14} {_status(ok)}  {dt:.2f}s")

    printed = ["1", "-1 - 3x", "-1 - x + 5x^2", "1 + 6x + 3x^2 - 7x^3"]
    suite("det", lambda: [str(shifted_hankel_det(FAMILY_22, n)) for n in range(4)] == printed)
    suite("gamma-tables", lambda: all(r.passed for r in run_tables(list(ALL_ROWS), list(cfg.table_ns), None)))
    if cfg.random_trials:
        suite("gamma-random", lambda: all(r.passed for r in run_tables(list(ALL_ROWS), [cfg.random_n], cfg.random_trials)))
    suite(
        "identities",
        lambda: all(r.passed for n in range(cfg.n_max + 1) for r in ident.all_residuals(n))
        and all(ident.kernel_membership_check(n) for n in range(cfg.n_max + 1)),
    )
    suite("closed-forms", lambda: all(d["status"] == "pass" for d in cf.verify_closed_forms(cfg.closed_form_n_max)))
    suite("generating-fn", lambda: cf.genfun_check(cfg.genfun_order))
    suite("zeros", lambda: not zeros.zero_table_matches() and zeros.verify_interlacing(max(cfg.zeros_n_max, 2)))

    def conj():
        hard = cj.verify_pattern(cj.PatternId.R3_TRIPLE, cfg.r3_m_max)
        for pid in cj.PatternId:
            rep = hard if pid is cj.PatternId.R3_TRIPLE else cj.verify_pattern(pid, cfg.pattern_m_max)
            out.emit(
                {"pattern": pid.value, "status": "pass" if rep.passed else "mismatch", "mismatches": len(rep.mismatches)},
                human=f"  {pid.value:<13} {'pass' if rep.passed else 'mismatch'} ({len(rep.mismatches)}/{len(rep.rows)})",
            )
        return hard.passed

    suite("conjectures", conj)
    return all(ok for _, ok, _ in results)


def cmd_verify_all(args, out: Writer) -> bool:
    cfg = VerifyConfig.quick(args.n_max) if args.quick else VerifyConfig().with_n_max(args.n_max)
    return verify_all(out, cfg)


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hankel-gamma", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv", "human"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("det", help="print H_lambda(n, x)")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--lambda", dest="lam", default="0", help='partition, e.g. "21" or "1^3"')
    d.add_argument("--beta", type=int, default=2)
    d.add_argument("--alpha", type=int, default=2)
    d.add_argument("--engine", choices=("bareiss", "interpolation"))
    d.set_defaults(func=cmd_det)

    g = sub.add_parser("gamma-table", help="check rows of the gamma-operator tables")
    gsub = g.add_subparsers(dest="action", required=True)
    gv = gsub.add_parser("verify")
    gv.add_argument("--table", default="all", help="1-4 or all")
    gv.add_argument("--row", help="a single row id such as 2.05")
    gv.add_argument("--n", type=int, default=5)
    gv.add_argument("--random-symbols", type=int, metavar="TRIALS")
    gv.add_argument("--seed", type=int, default=0)
    gv.set_defaults(func=cmd_gamma_table)

    i = sub.add_parser("identities", help="entry identities, linear system and ODE")
    isub = i.add_subparsers(dest="action", required=True)
    iv = isub.add_parser("verify")
    iv.add_argument("--n-max", type=int, default=12)
    iv.add_argument("--n-min", type=int, default=0)
    iv.set_defaults(func=cmd_identities)

    c = sub.add_parser("closed-form", help="closed forms and series")
    csub = c.add_subparsers(dest="action", required=True)
    cv = csub.add_parser("verify")
    cv.add_argument("--n-max", type=int, default=25)
    cv.set_defaults(func=cmd_closed_form)
    ce = csub.add_parser("eval")
    ce.add_argument("--n", type=int, required=True)
    ce.add_argument("--x", required=True, help="rational literal p/q")
    ce.set_defaults(func=cmd_closed_form)

    z = sub.add_parser("zeros", help="isolate the real zeros of H_0(n, x)")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--digits", type=int, default=3)
    z.add_argument("--width", default="1/1000000")
    z.add_argument("--mode", choices=("round", "truncate"), default="round")
    z.set_defaults(func=cmd_zeros)

    s = sub.add_parser("scan", help="compute F(n, r) and tag conjectured patterns")
    s.add_argument("--n-max", type=int)
    s.add_argument("--r-max", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_scan, scan_action=None)
    ssub = s.add_subparsers(dest="scan_action")
    se = ssub.add_parser("export")
    se.add_argument("--csv", required=True)
    se.add_argument("--in", dest="input", default="results.jsonl")

    v = sub.add_parser("verify-all", help="run every suite")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--quick", action="store_true")
    v.set_defaults(func=cmd_verify_all)
    return p


def main(argv=None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    out = Writer(args.format, stream)
    try:
        ok = args.func(args, out)
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MismatchReport as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, HankelGammaError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not ok:
        print("verification failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def run(argv) -> tuple[int, str]:
    """Invoke the CLI in-process and capture stdout (used by tests and scripts)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
