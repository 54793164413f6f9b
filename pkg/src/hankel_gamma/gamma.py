"""The multilinear gamma operator on tuples of matrices.

gamma_A(X_1, ..., X_m) is the mixed derivative d/dt_1 ... d/dt_m of
det(A + t_1 X_1 + ... + t_m X_m) at t = 0. It is evaluated here as a sum of
determinants: for every m-subset S of column indices and every bijection
sigma, column S[k] of A is replaced by column S[k] of X_sigma(k).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from gmpy2 import mpq

from .errors import MismatchReport, NTooSmall, TooManyArguments
from .exact import ZERO, Poly, Q, det_rational, interpolate_values
from .hankel import (
    FamilySpec,
    Partition,
    PolyMatrix,
    convolution_poly,
    entry_poly,
    shifted_hankel_det,
)

# -- entry sources -------------------------------------------------------------


class FamilySource:
    """Entries a_k(x) of a (beta, alpha) family."""

    def __init__(self, spec: FamilySpec):
        self.spec = spec

    def a(self, k: int) -> Poly:
        return entry_poly(self.spec, k)

    def c(self, k: int) -> Poly:
        return convolution_poly(self.spec, k)

    def da(self, k: int) -> Poly:
        return entry_poly(self.spec, k).derivative()

    def H(self, n: int, lam) -> Poly:
        return shifted_hankel_det(self.spec, n, Partition.parse(lam).parts)


class SymbolSource:
    """Free symbols a_0, a_1, ... replaced by fixed rational values."""

    def __init__(self, values: Sequence):
        self.values = [Q(v) for v in values]
        self._conv: dict[int, Poly] = {}

    @classmethod
    def random(cls, count: int, rng: random.Random, bound: int = 10**4) -> "SymbolSource":
        return cls(mpq(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(count))

    def a(self, k: int) -> Poly:
        if k >= len(self.values):
            raise IndexError(f"symbol a_{k} not drawn (have {len(self.values)})")
        return Poly.const(self.values[k])

    def c(self, k: int) -> Poly:
        if k not in self._conv:
            v = self.values
            self._conv[k] = Poly.const(sum((v[i] * v[k - i] for i in range(k + 1)), mpq(0)))
        return self._conv[k]

    def da(self, k: int) -> Poly:
        raise TypeError("free symbols carry no x-dependence to differentiate")

    def H(self, n: int, lam) -> Poly:
        shifts = Partition.parse(lam).column_shifts(n)
        v = self.values
        rows = [[v[i + j + shifts[j]] for j in range(n + 1)] for i in range(n + 1)]
        return Poly.const(det_rational(rows))


# -- matrix descriptors ----------------------------------------------------------

SHIFT = "shift"
WEIGHTED = "index_weighted_shift"
CONV = "conv_shift"
DERIV = "deriv_shift"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class MatrixDescriptor:
    """Symbolic argument matrix: entry (i, j) is a_{i+j+k}, (i+j) a_{i+j+k},
    c_{i+j+k}, d/dx a_{i+j+k}, or a supplied matrix."""

    kind: str
    k: int = 0
    matrix: PolyMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == CONV and self.k < -1:
            raise ValueError("ConvShift needs k >= -1")
        if self.kind in (SHIFT, WEIGHTED, DERIV) and self.k < 0:
            raise ValueError(f"{self.kind} needs k >= 0")
        if self.kind == EXPLICIT and self.matrix is None:
            raise ValueError("Explicit descriptor needs a matrix")

    def entry(self, i: int, j: int, source) -> Poly:
        idx = i + j + self.k
        if self.kind == SHIFT:
            return source.a(idx)
        if self.kind == WEIGHTED:
            return source.a(idx) * (i + j)
        if self.kind == CONV:
            return source.c(idx)
        if self.kind == DERIV:
            return source.da(idx)
        return self.matrix[i, j]

    def materialize(self, n: int, source) -> PolyMatrix:
        if self.kind == EXPLICIT:
            if self.matrix.size != n + 1:
                raise ValueError("explicit matrix has the wrong size")
            return self.matrix
        return PolyMatrix.from_function(n + 1, lambda i, j: self.entry(i, j, source))

    def split_weights(self) -> tuple["MatrixDescriptor", "MatrixDescriptor"]:
        """Row-weight and column-weight halves [i a_{i+j+k}], [j a_{i+j+k}] as explicit builders."""
        if self.kind != WEIGHTED:
            raise ValueError("only index-weighted descriptors split")
        return _RowWeighted(self.k), _ColWeighted(self.k)

    def derivative(self) -> "MatrixDescriptor":
        if self.kind == SHIFT:
            return DerivShift(self.k)
        raise ValueError(f"no descriptor-level derivative for {self.kind}")

    def label(self) -> str:
        if self.kind == SHIFT:
            return f"[a_{{i+j{_off(self.k)}}}]"
        if self.kind == WEIGHTED:
            return f"[(i+j)a_{{i+j{_off(self.k)}}}]"
        if self.kind == CONV:
            return f"[c_{{i+j{_off(self.k)}}}]"
        if self.kind == DERIV:
            return f"[d/dx a_{{i+j{_off(self.k)}}}]"
        return "[explicit]"


def _off(k: int) -> str:
    return "" if k == 0 else (f"+{k}" if k > 0 else f"{k}")


class _RowWeighted(MatrixDescriptor):
    def __init__(self, k):
        super().__init__(WEIGHTED, k)

    def entry(self, i, j, source):
        return source.a(i + j + self.k) * i


class _ColWeighted(MatrixDescriptor):
    def __init__(self, k):
        super().__init__(WEIGHTED, k)

    def entry(self, i, j, source):
        return source.a(i + j + self.k) * j


def Shift(k: int) -> MatrixDescriptor:
    return MatrixDescriptor(SHIFT, k)


def IndexWeightedShift(k: int) -> MatrixDescriptor:
    return MatrixDescriptor(WEIGHTED, k)


def ConvShift(k: int) -> MatrixDescriptor:
    return MatrixDescriptor(CONV, k)


def DerivShift(k: int) -> MatrixDescriptor:
    return MatrixDescriptor(DERIV, k)


def Explicit(m: PolyMatrix) -> MatrixDescriptor:
    return MatrixDescriptor(EXPLICIT, 0, m)


# -- the operator ------------------------------------------------------------------


def _replacement_sum(base: list, args: list, by: str):
    """Sum of det(A_{S,sigma}) for rational matrices given as row lists."""
    size = len(base)
    m = len(args)
    if by == "columns":
        lines_a = [tuple(row[j] for row in base) for j in range(size)]
        lines_x = [[tuple(row[j] for row in x) for j in range(size)] for x in args]
    elif by == "rows":
        lines_a = [tuple(row) for row in base]
        lines_x = [[tuple(row) for row in x] for x in args]
    else:
        raise ValueError("by must be 'columns' or 'rows'")
    zero_line = tuple(mpq(0) for _ in range(size))
    total = mpq(0)
    perms = list(itertools.permutations(range(m)))
    for subset in itertools.combinations(range(size), m):
        for sigma in perms:
            lines = list(lines_a)
            for slot, which in zip(subset, sigma):
                lines[slot] = lines_x[which][slot]
            # a repeated or zero line forces a zero determinant
            if len(set(lines)) < size or zero_line in lines:
                continue
            # det of the transpose equals det, so column lines can be used as rows
            total += det_rational(lines)
    return total


def gamma_definitional(A: PolyMatrix, args: Sequence[PolyMatrix], by: str = "columns") -> Poly:
    """gamma_A(X_1, ..., X_m) as the (S, sigma) replacement sum, exactly in Q[x].

    Every A_{S,sigma} takes row i from one of A, X_1, ..., X_m, so its degree is
    at most the sum over rows of the largest row-i degree among those matrices.
    The sum is sampled at that many + 1 points and interpolated.
    """
    size = A.size
    m = len(args)
    if m > size:
        raise TooManyArguments(f"{m} arguments for a {size}x{size} matrix")
    if any(x.size != size for x in args):
        raise ValueError("argument sizes differ from A")
    mats = [A, *args]
    if by == "rows":
        # row replacements: bound the degree column by column instead
        mats_t = [mt.transpose() for mt in mats]
    else:
        mats_t = mats
    bound = 0
    for i in range(size):
        bound += max(
            (len(mt.rows[i][j].coeffs) - 1 for mt in mats_t for j in range(size)), default=0
        )
    bound = max(bound, 0)
    values = []
    for x0 in range(bound + 1):
        base = A.evaluate(x0)
        evald = [x.evaluate(x0) for x in args]
        if m == 0:
            values.append(det_rational(base))
        else:
            values.append(_replacement_sum(base, evald, by))
    return interpolate_values(values)


def gamma_of(n: int, source, args: Sequence[MatrixDescriptor], A: PolyMatrix | None = None) -> Poly:
    """gamma_A on descriptors, with A the Hankel matrix of the source unless given."""
    if A is None:
        A = PolyMatrix.from_function(n + 1, lambda i, j: source.a(i + j))
    return gamma_definitional(A, [d.materialize(n, source) for d in args])


def gamma_derivative_check(spec: FamilySpec, n: int, args: Sequence[MatrixDescriptor]) -> bool:
    """d/dx gamma_A(X...) == gamma_A(A', X...) + sum_j gamma_A(..., X_j', ...)."""
    if len(args) > n:
        raise TooManyArguments(f"derivative rule needs m <= n, got m={len(args)}, n={n}")
    src = FamilySource(spec)
    A = PolyMatrix.from_function(n + 1, lambda i, j: src.a(i + j))
    mats = [d.materialize(n, src) for d in args]
    lhs = gamma_definitional(A, mats).derivative()
    dA = DerivShift(0).materialize(n, src)
    rhs = gamma_definitional(A, [dA, *mats])
    for j, d in enumerate(args):
        try:
            dX = d.derivative().materialize(n, src)
        except ValueError:
            dX = mats[j].derivative()
        rhs = rhs + gamma_definitional(A, mats[:j] + [dX] + mats[j + 1 :])
    return lhs == rhs


# -- table rows --------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    """coef(n) * [a_sym] * H_lam."""

    coef: Callable[[int], int]
    lam: str
    sym: int | None = None


@dataclass(frozen=True)
class GammaTableEntry:
    row_id: str
    args: tuple
    rhs: tuple
    text: str = ""

    @property
    def partitions(self) -> list[Partition]:
        return [Partition.parse(t.lam) for t in self.rhs]

    @property
    def min_n(self) -> int:
        """Smallest n for which every H_lambda exists and every shift fits."""
        floor = 0
        for lam in self.partitions:
            if lam.parts:
                floor = max(floor, lam.largest + lam.length - 1)
        for d in self.args:
            floor = max(floor, d.k)
        floor = max(floor, len(self.args) - 1)
        return floor

    def corrupted(self) -> "GammaTableEntry":
        """Copy whose first coefficient is off by one (negative control)."""
        if not self.rhs:
            bad = (Term(lambda n: 1, "0"),)
        else:
            t0 = self.rhs[0]
            bad = (Term(lambda n, f=t0.coef: f(n) + 1, t0.lam, t0.sym),) + self.rhs[1:]
        return GammaTableEntry(self.row_id + "*", self.args, bad, self.text)


def gamma_table_rhs(entry: GammaTableEntry, source, n: int) -> Poly:
    if n < entry.min_n:
        raise NTooSmall(f"{entry.row_id} needs n >= {entry.min_n}, got {n}")
    if isinstance(source, FamilySpec):
        source = FamilySource(source)
    total = ZERO
    for t in entry.rhs:
        c = t.coef(n)
        if not c:
            continue
        piece = source.H(n, t.lam) * c
        if t.sym is not None:
            piece = piece * source.a(t.sym)
        total = total + piece
    return total


@dataclass
class TableReport:
    row_id: str
    status: str
    n: int
    mode: str
    lhs: str
    rhs: str
    trials: int = 1

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "row_id": self.row_id,
            "status": self.status,
            "n": self.n,
            "mode": self.mode,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "trials": self.trials,
        }


def verify_table(
    entry: GammaTableEntry,
    spec: FamilySpec | None = None,
    n: int = 5,
    trials: int | None = None,
    seed: int = 0,
    strict: bool = True,
) -> TableReport:
    """Check one row.

    With ``trials`` unset the row is compared as an exact polynomial identity on
    the family; otherwise the symbols a_k are replaced by independent random
    rationals with numerators and denominators in [1, 10**4], once per trial.
    A mismatch raises MismatchReport when ``strict``.
    """
    if n < entry.min_n:
        raise NTooSmall(f"{entry.row_id} needs n >= {entry.min_n}, got {n}")
    if trials is None:
        src = FamilySource(spec or FamilySpec(2, 2))
        lhs = gamma_of(n, src, entry.args)
        rhs = gamma_table_rhs(entry, src, n)
        ok = lhs == rhs
        report = TableReport(entry.row_id, "pass" if ok else "fail", n, "family", str(lhs), str(rhs))
    else:
        rng = random.Random(f"{entry.row_id}:{n}:{seed}")
        need = 2 * n + max((d.k for d in entry.args), default=0) + 8
        ok = True
        lhs = rhs = ZERO
        done = 0
        for _ in range(trials):
            src = SymbolSource.random(need, rng)
            lhs = gamma_of(n, src, entry.args)
            rhs = gamma_table_rhs(entry, src, n)
            done += 1
            if lhs != rhs:
                ok = False
                break
        report = TableReport(
            entry.row_id, "pass" if ok else "fail", n, "random_symbols", str(lhs), str(rhs), done
        )
    if strict and not report.passed:
        raise MismatchReport(entry.row_id, report.lhs, report.rhs, f"n={n} mode={report.mode}")
    return report
