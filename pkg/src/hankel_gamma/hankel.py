"""Entry sequences, shifted Hankel matrices H_lambda and two determinant engines."""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .errors import PartitionTooLong
from .exact import ONE, ZERO, Poly, det_rational, interpolate_values, poly_interpolate


def binom(a: int, b: int) -> int:
    """C(a, b), taken to be 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class FamilySpec:
    beta: int = 2
    alpha: int = 2

    def __post_init__(self):
        if self.beta < 1 or self.alpha < 0:
            raise ValueError(f"need beta >= 1 and alpha >= 0, got {self}")


FAMILY_22 = FamilySpec(2, 2)


@functools.lru_cache(maxsize=None)
def entry_poly(spec: FamilySpec, k: int) -> Poly:
    """a_k(x) = sum_m C(beta*k + alpha - m, k - m) x^m."""
    if k < 0:
        raise ValueError("entry index must be non-negative")
    return Poly(binom(spec.beta * k + spec.alpha - m, k - m) for m in range(k + 1))


@functools.lru_cache(maxsize=None)
def convolution_poly(spec: FamilySpec, k: int) -> Poly:
    """c_k = sum_{i<=k} a_i a_{k-i}, with c_{-1} = 0."""
    if k < -1:
        raise ValueError("convolution index must be >= -1")
    acc = ZERO
    for i in range(k + 1):
        acc = acc + entry_poly(spec, i) * entry_poly(spec, k - i)
    return acc


_PART_TOKEN = re.compile(r"(\d)(?:\^(\d))?")


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the zero partition."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text) -> "Partition":
        """Parse exponent notation such as "0", "21", "1^3", "2^21", "31^2"."""
        if isinstance(text, Partition):
            return text
        if isinstance(text, (tuple, list)):
            return cls(tuple(text))
        text = str(text).replace(" ", "")
        if text in ("0", ""):
            return cls(())
        parts: list[int] = []
        pos = 0
        for m in _PART_TOKEN.finditer(text):
            if m.start() != pos:
                raise ValueError(f"bad partition literal {text!r}")
            parts += [int(m.group(1))] * int(m.group(2) or 1)
            pos = m.end()
        if pos != len(text):
            raise ValueError(f"bad partition literal {text!r}")
        return cls(tuple(parts))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def mu(self, n: int) -> tuple:
        """Parts padded with zeros to length n + 1."""
        if len(self.parts) > n + 1:
            raise PartitionTooLong(f"{self} has more than {n + 1} parts")
        return self.parts + (0,) * (n + 1 - len(self.parts))

    def column_shifts(self, n: int) -> tuple:
        """Shift applied to column j, 0 <= j <= n; the last column carries the largest part."""
        mu = self.mu(n)
        return tuple(mu[n - j] for j in range(n + 1))

    def __str__(self):
        if not self.parts:
            return "0"
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            count = j - i
            out.append(f"{self.parts[i]}" + (f"^{count}" if count > 1 else ""))
            i = j
        return "".join(out)


class PolyMatrix:
    """Square matrix of Poly entries, stored row-major as tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(Poly.coerce(e) for e in row) for row in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("PolyMatrix must be square")

    @classmethod
    def from_function(cls, size: int, fn: Callable[[int, int], object]) -> "PolyMatrix":
        return cls([[fn(i, j) for j in range(size)] for i in range(size)])

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls.from_function(size, lambda i, j: ONE if i == j else ZERO)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.rows])

    def derivative(self) -> "PolyMatrix":
        return self.map(lambda e: e.derivative())

    def scale(self, c) -> "PolyMatrix":
        return self.map(lambda e: e * c)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def with_column(self, j: int, col: Sequence) -> "PolyMatrix":
        return PolyMatrix(
            [row[:j] + (col[i],) + row[j + 1 :] for i, row in enumerate(self.rows)]
        )

    def with_columns_swapped(self, j: int, k: int) -> "PolyMatrix":
        def swap(row):
            row = list(row)
            row[j], row[k] = row[k], row[j]
            return row

        return PolyMatrix([swap(r) for r in self.rows])

    def evaluate(self, x0) -> list:
        return [[e(x0) for e in row] for row in self.rows]

    def degree_bound(self) -> int:
        """Sum over rows of the largest entry degree (zero rows contribute 0)."""
        total = 0
        for row in self.rows:
            total += max((len(e.coeffs) - 1 for e in row), default=0) if row else 0
        return max(total, 0)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"PolyMatrix(size={self.size})"


def hankel_matrix(spec: FamilySpec, n: int, shift: int = 0) -> PolyMatrix:
    return PolyMatrix.from_function(n + 1, lambda i, j: entry_poly(spec, i + j + shift))


def shifted_matrix(spec: FamilySpec, n: int, lam) -> PolyMatrix:
    """Matrix [a_{i + j + mu_{n+1-j}}] whose determinant is H_lambda(n, x)."""
    shifts = Partition.parse(lam).column_shifts(n)
    return PolyMatrix.from_function(n + 1, lambda i, j: entry_poly(spec, i + j + shifts[j]))


# -- determinant engines -----------------------------------------------------


def det_bareiss(m: PolyMatrix) -> Poly:
    """Fraction-free elimination over Q[x]; each division by the previous pivot is exact."""
    n = m.size
    if n == 0:
        return ONE
    a = [list(row) for row in m.rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for s in range(k + 1, n):
                if not a[s][k].is_zero():
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                num = rowi[j] * pivot - lead * rowk[j]
                rowi[j] = num.exact_div(prev) if not prev.is_constant() else num / prev.coeffs[0]
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_interpolation(m: PolyMatrix, points: Sequence | None = None) -> Poly:
    """Evaluate at degree_bound + 1 points, take rational determinants, interpolate.

    The default abscissae are 0, 1, ..., D.
    """
    n = m.size
    if n == 0:
        return ONE
    bound = m.degree_bound()
    xs = list(points) if points is not None else list(range(bound + 1))
    if len(xs) < bound + 1:
        raise ValueError(f"need at least {bound + 1} sample points, got {len(xs)}")
    # evaluate each distinct entry once per point
    distinct: dict = {}
    index = [[distinct.setdefault(e, len(distinct)) for e in row] for row in m.rows]
    polys = list(distinct)
    values = []
    for x0 in xs:
        vals = [p(x0) for p in polys]
        values.append(det_rational([[vals[k] for k in row] for row in index]))
    if points is None:
        return interpolate_values(values)
    return poly_interpolate(list(zip(xs, values)))


ENGINES = {"bareiss": det_bareiss, "interpolation": det_interpolation}


def determinant(m: PolyMatrix, engine: str | None = None) -> Poly:
    """Dispatch to an engine; Bareiss is the default when every entry has degree <= 1."""
    if engine is None:
        low = all(len(e.coeffs) <= 2 for row in m.rows for e in row)
        engine = "bareiss" if low else "interpolation"
    return ENGINES[engine](m)


@functools.lru_cache(maxsize=4096)
def shifted_hankel_det(spec: FamilySpec, n: int, lam=(), engine: str | None = None) -> Poly:
    """H_lambda(n, x) for the family; lam=() or "0" is the plain Hankel determinant."""
    lam = Partition.parse(lam)
    return determinant(shifted_matrix(spec, n, lam), engine)


def hankel_minors(spec: FamilySpec, n_max: int) -> list[Poly]:
    """[H_0(0, x), ..., H_0(n_max, x)] from a single Bareiss pass.

    Without row swaps the k-th Bareiss pivot is the leading principal k x k
    minor, which is H_0(k-1, x). A vanishing pivot falls back to one
    determinant per size.
    """
    m = hankel_matrix(spec, n_max)
    size = m.size
    a = [list(row) for row in m.rows]
    minors = [a[0][0]]
    prev = ONE
    for k in range(size - 1):
        pivot = a[k][k]
        if pivot.is_zero():
            return [shifted_hankel_det(spec, j) for j in range(n_max + 1)]
        rowk = a[k]
        for i in range(k + 1, size):
            rowi = a[i]
            lead = rowi[k]
            for j in range(k + 1, size):
                num = rowi[j] * pivot - lead * rowk[j]
                rowi[j] = num.exact_div(prev) if not prev.is_constant() else num / prev.coeffs[0]
        prev = pivot
        minors.append(a[k + 1][k + 1])
    return minors


# -- convolution matrix expansion ---------------------------------------------


def convolution_matrix(spec: FamilySpec, n: int, k: int) -> PolyMatrix:
    return PolyMatrix.from_function(n + 1, lambda i, j: convolution_poly(spec, i + j + k))


def convolution_matrix_terms(spec: FamilySpec, n: int, k: int) -> list[tuple[int, PolyMatrix]]:
    """The (p, matrix) terms whose a_p-weighted sum rebuilds [c_{i+j+k}].

    First family: a_p [a_{i+j+k-p} chi(j >= p-k)] for p = 0..n+k.
    Second family: a_p [a_{i+j+k-p} chi(i > p)] for p = 0..n-1.
    """
    if k < -1:
        raise ValueError("k must be >= -1")

    def a(idx):
        return entry_poly(spec, idx) if idx >= 0 else ZERO

    terms = []
    for p in range(n + k + 1):
        terms.append(
            (p, PolyMatrix.from_function(n + 1, lambda i, j: a(i + j + k - p) if j >= p - k else ZERO))
        )
    for p in range(n):
        terms.append(
            (p, PolyMatrix.from_function(n + 1, lambda i, j: a(i + j + k - p) if i > p else ZERO))
        )
    return terms


def convolution_matrix_expansion_check(spec: FamilySpec, n: int, k: int) -> bool:
    size = n + 1
    total = PolyMatrix.from_function(size, lambda i, j: ZERO)
    for p, mat in convolution_matrix_terms(spec, n, k):
        total = total + mat.scale(entry_poly(spec, p))
    return total == convolution_matrix(spec, n, k)
