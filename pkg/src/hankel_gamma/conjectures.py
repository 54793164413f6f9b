"""Integer Hankel determinants F(n, r) = det[C(2(i+j)+r, i+j)] and their conjectured patterns.

The determinant is ground truth; each pattern formula is a hypothesis whose
instances are reported as pass or mismatch with both values.
"""

from __future__ import annotations

import csv
import functools
import json
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Callable, Iterator

from gmpy2 import mpq, mpz

from .errors import IoFailure
from .exact import det_integer
from .hankel import binom


class PatternId(str, Enum):
    R3_TRIPLE = "R3_TRIPLE"
    R7_SEVEN = "R7_SEVEN"
    ODD_RM = "ODD_RM"
    EVEN_RM_MOD4 = "EVEN_RM_MOD4"
    ODD_HALF = "ODD_HALF"
    EVEN_HALF = "EVEN_HALF"
    R5_M1 = "R5_M1"
    R7_M1 = "R7_M1"
    R9_M1 = "R9_M1"


# proven (x = 1 corollary); every other pattern is conjectural
PROVEN = frozenset({PatternId.R3_TRIPLE})


# -- determinants -------------------------------------------------------------------------


def f_matrix(n: int, r: int) -> list[list[int]]:
    return [[binom(2 * (i + j) + r, i + j) for j in range(n + 1)] for i in range(n + 1)]


def f_value(n: int, r: int) -> int:
    if n < 0 or r < 0:
        raise ValueError(f"F(n, r) needs n, r >= 0, got ({n}, {r})")
    m = [[mpz(v) for v in row] for row in f_matrix(n, r)]
    return int(det_integer(m))


@functools.lru_cache(maxsize=64)
def f_column(n_max: int, r: int) -> tuple[int, ...]:
    """(F(0, r), ..., F(n_max, r)) as leading principal minors of one Bareiss pass."""
    a = [[mpz(v) for v in row] for row in f_matrix(n_max, r)]
    size = n_max + 1
    out = [int(a[0][0])]
    prev = mpz(1)
    for k in range(size - 1):
        pivot = a[k][k]
        if pivot == 0:
            return tuple(f_value(j, r) for j in range(n_max + 1))
        for i in range(k + 1, size):
            lead = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
        out.append(int(a[k + 1][k + 1]))
    return tuple(out)


# -- pattern formulas -----------------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    pattern: PatternId
    case: str
    r: int
    m: int
    n: int
    expected: mpq


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _r3(m):
    return [("3m", 3 * m, 2 * m + 1), ("3m+1", 3 * m + 1, -4 * (m + 1)), ("3m+2", 3 * m + 2, 2 * m + 3)]


def _r7(m):
    q = mpq
    return [
        ("7m", 7 * m, (2 * m + 1) ** 3),
        ("7m+1", 7 * m + 1, q((m + 1) * (2 * m + 1) ** 2 * (9604 * m**3 + 9604 * m**2 - 1323 * m - 2340), 90)),
        ("7m+2", 7 * m + 2, -q((m + 1) ** 2 * (2 * m + 1) * (19208 * m**3 + 67228 * m**2 + 70854 * m + 23445), 45)),
        ("7m+3", 7 * m + 3, 64 * (m + 1) ** 3),
        # printed with the literal term "3015m" where a constant is expected; evaluated as printed
        ("7m+4", 7 * m + 4, q((m + 1) ** 2 * (2 * m + 3) * (19208 * m**3 + 48020 * m**2 + 32438 * m + 3015 * m), 45)),
        ("7m+5", 7 * m + 5, -q((m + 1) * (2 * m + 3) ** 2 * (9604 * m**3 + 48020 * m**2 + 75509 * m + 38110), 90)),
        ("7m+6", 7 * m + 6, (2 * m + 3) ** 3),
    ]


def _odd_rm(m, r):
    v = (2 * m + 1) ** ((r - 1) // 2)
    cases = [("rm", r * m, v)]
    if m >= 1:
        cases.append(("rm-1", r * m - 1, v))
    return cases


def _even_rm(m, r):
    v = 1 if r % 4 == 0 else _sgn(m)
    cases = [("rm", r * m, v)]
    if m >= 1:
        cases.append(("rm-1", r * m - 1, v))
    return cases


def _odd_half(m, r):
    return [("rm+(r-1)/2", r * m + (r - 1) // 2, 2 ** (r - 1) * (m + 1) ** ((r - 1) // 2))]


def _even_half(m, r):
    base = (2 * r * (m + 1)) ** (r // 2 - 1)
    sign = _sgn(r // 4 + 1) if r % 4 == 0 else _sgn((r + 2) // 4 + m)
    return [("rm+r/2", r * m + r // 2, sign * base)]


def _r5_m1(m):
    return [("5m+1", 5 * m + 1, -mpq((m + 1) * (2 * m + 1) * (50 * m + 39), 3))]


def _r7_m1(m):
    return [("7m+1", 7 * m + 1, mpq((m + 1) * (2 * m + 1) ** 2 * (9604 * m**3 + 9604 * m**2 - 1323 * m - 2340), 90))]


def _r9_m1(m):
    quartic = 52488 * m**4 + 69984 * m**3 + 22518 * m**2 + 1674 * m + 1505
    return [("9m+1", 9 * m + 1, -mpq((m + 1) * (2 * m + 1) ** 3 * (3 * m + 2) * quartic, 70))]


ODD_R = (1, 3, 5, 7, 9)
EVEN_R = (2, 4, 6, 8)

# pattern -> (r values it ranges over by default, case generator taking (m, r))
_PATTERNS: dict[PatternId, tuple[tuple[int, ...], Callable]] = {
    PatternId.R3_TRIPLE: ((3,), lambda m, r: _r3(m)),
    PatternId.R7_SEVEN: ((7,), lambda m, r: _r7(m)),
    PatternId.ODD_RM: (ODD_R, _odd_rm),
    PatternId.EVEN_RM_MOD4: (EVEN_R, _even_rm),
    PatternId.ODD_HALF: (ODD_R, _odd_half),
    PatternId.EVEN_HALF: (EVEN_R, _even_half),
    PatternId.R5_M1: ((5,), lambda m, r: _r5_m1(m)),
    PatternId.R7_M1: ((7,), lambda m, r: _r7_m1(m)),
    PatternId.R9_M1: ((9,), lambda m, r: _r9_m1(m)),
}


def pattern_instances(pid: PatternId, m_max: int, r_values=None) -> Iterator[Instance]:
    pid = PatternId(pid)
    default_r, gen = _PATTERNS[pid]
    for r in r_values or default_r:
        if r not in default_r:
            continue
        for m in range(m_max + 1):
            for case, n, expected in gen(m, r):
                if n >= 0:
                    yield Instance(pid, case, r, m, n, mpq(expected))


@dataclass
class PatternReport:
    pattern: PatternId
    m_max: int
    rows: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict]:
        return [row for row in self.rows if row["status"] != "pass"]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def proven(self) -> bool:
        return self.pattern in PROVEN

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.value,
            "m_max": self.m_max,
            "proven": self.proven,
            "status": "pass" if self.passed else "mismatch",
            "rows": self.rows,
        }


def _format(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def verify_pattern(pid: PatternId, m_max: int, r_values=None) -> PatternReport:
    pid = PatternId(pid)
    report = PatternReport(pid, m_max)
    instances = list(pattern_instances(pid, m_max, r_values))
    top: dict[int, int] = {}
    for inst in instances:
        top[inst.r] = max(top.get(inst.r, 0), inst.n)
    for inst in instances:
        actual = f_column(top[inst.r], inst.r)[inst.n]
        report.rows.append(
            {
                "case": inst.case,
                "r": inst.r,
                "m": inst.m,
                "n": inst.n,
                "expected": _format(inst.expected),
                "actual": str(actual),
                "status": "pass" if inst.expected == actual else "mismatch",
            }
        )
    return report


# -- scanning and persistence --------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureRecord:
    n: int
    r: int
    value: int
    matched_patterns: tuple[str, ...]
    timestamp: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "value": str(self.value),
            "patterns": list(self.matched_patterns),
            "ts": self.timestamp,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ConjectureRecord":
        return cls(int(d["n"]), int(d["r"]), int(d["value"]), tuple(d.get("patterns", ())), d.get("ts", ""))


def _instances_by_cell(n_max: int, r_max: int) -> dict[tuple[int, int], list[Instance]]:
    cells: dict[tuple[int, int], list[Instance]] = {}
    for pid in PatternId:
        for inst in pattern_instances(pid, n_max + 1, tuple(range(r_max + 1))):
            if inst.n <= n_max:
                cells.setdefault((inst.n, inst.r), []).append(inst)
    return cells


def _column_task(args):
    n_max, r = args
    return r, f_column(n_max, r)


def scan_records(n_max: int, r_max: int, workers: int = 1) -> list[ConjectureRecord]:
    """Every F(n, r) in range, tagged with the patterns whose formula it satisfies."""
    cells = _instances_by_cell(n_max, r_max)
    tasks = [(n_max, r) for r in range(r_max + 1)]
    if workers > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            columns = dict(pool.map(_column_task, tasks))
    else:
        columns = dict(map(_column_task, tasks))
    ts = datetime.now(timezone.utc).isoformat(timespec="seconds")
    out = []
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            value = columns[r][n]
            matched = sorted({i.pattern.value for i in cells.get((n, r), ()) if i.expected == value})
            out.append(ConjectureRecord(n, r, value, tuple(matched), ts))
    return out


def load_records(path) -> dict[tuple[int, int], ConjectureRecord]:
    path = Path(path)
    if not path.exists():
        return {}
    try:
        with path.open() as fh:
            recs = [ConjectureRecord.from_json(json.loads(line)) for line in fh if line.strip()]
    except (OSError, ValueError, KeyError) as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    return {(rec.n, rec.r): rec for rec in recs}


def _write_atomic(path: Path, lines: list[str]):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.writelines(lines)
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def scan(n_max: int, r_max: int, out, workers: int = 1) -> int:
    """Compute F over the grid and merge into the JSON-lines file at `out`.

    Existing records for the same (n, r) are replaced. Returns the number of
    records computed in this run.
    """
    if n_max < 0 or r_max < 0:
        raise ValueError("scan bounds must be >= 0")
    path = Path(out)
    existing = load_records(path)
    fresh = scan_records(n_max, r_max, workers)
    for rec in fresh:
        existing[(rec.n, rec.r)] = rec
    lines = [json.dumps(existing[key].to_json()) + "\n" for key in sorted(existing, key=lambda k: (k[1], k[0]))]
    _write_atomic(path, lines)
    return len(fresh)


def export_csv(jsonl_path, csv_path) -> int:
    recs = load_records(jsonl_path)
    try:
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "r", "value", "patterns", "ts"])
            for key in sorted(recs, key=lambda k: (k[1], k[0])):
                d = recs[key].to_json()
                w.writerow([d["n"], d["r"], d["value"], ";".join(d["patterns"]), d["ts"]])
    except OSError as exc:
        raise IoFailure(f"cannot write {csv_path}: {exc}") from exc
    return len(recs)
