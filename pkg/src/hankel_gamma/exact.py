"""Exact rationals, dense univariate polynomials over Q and truncated power series.

The scalar type is ``gmpy2.mpq``: canonical (reduced, positive denominator)
after every operation, and several times faster than ``fractions.Fraction``
on the determinant workloads used here.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq, mpz

from .errors import DuplicateAbscissa, NonUnitConstantTerm, NotDivisible

Rational = type(mpq(0))

NEG_INF = -math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def Q(value) -> Rational:
    """Coerce ints, Fractions, mpz/mpq and "p/q" strings to an exact rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def parse_rational(text: str) -> Rational:
    """Parse an integer literal or ``p/q``; decimals and exponents are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return mpq(num, den)


def format_rational(r) -> str:
    r = Q(r)
    return f"{r.numerator}/{r.denominator}"


class Poly:
    """Dense polynomial in x with rational coefficients, lowest power first.

    Instances are immutable and hashable; the zero polynomial has an empty
    coefficient tuple so structural equality is polynomial equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs already holds mpq values; only trailing zeros need stripping
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([mpq(0), mpq(1)])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._raw([Q(c)])

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls._raw([mpq(0)] * k + [Q(c)])

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return cls._raw([Q(other)])

    # -- basic properties --------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def coeff(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else mpq(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = Q(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ZERO
            return Poly._raw([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) == 1:
            return Poly._raw([a[0] * c for c in b])
        if len(b) == 1:
            return Poly._raw([b[0] * c for c in a])
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        # division by a nonzero scalar only; polynomial division is exact_div
        c = Q(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return Poly._raw([a / c for a in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < dq:
            return ZERO, self
        quot = [mpq(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly._raw(quot), Poly._raw(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NotDivisible(f"({self}) / ({other}) leaves remainder {r}")
        return q

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- calculus / evaluation ---------------------------------------------

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        x = Q(x)
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self.coeffs) if k])

    def compose(self, inner: "Poly") -> "Poly":
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "Poly":
        """Return p(x + c)."""
        return self.compose(Poly([c, 1]))

    def monic(self) -> "Poly":
        return self / self.leading if self.coeffs else self

    def primitive(self) -> "Poly":
        """Scale to integer coefficients with gcd 1 and positive leading term."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = math.lcm(den, int(c.denominator))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Poly([mpq(v, g) for v in ints])

    # -- formatting ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return cls(parse_rational(s) for s in obj["coeffs"])

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = Poly()
ONE = Poly([1])
X = Poly.x()


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_exact_div(p: Poly, q: Poly) -> Poly:
    return p.exact_div(q)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = Poly.coerce(p), Poly.coerce(q)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_interpolate(points: Sequence[tuple]) -> Poly:
    """Newton divided differences; returns the unique poly of degree < len(points)."""
    xs = [Q(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be pairwise distinct")
    dd = [Q(y) for _, y in points]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form by Horner from the innermost coefficient
    cs: list = []
    for i in range(n - 1, -1, -1):
        # cs <- cs * (x - xs[i]) + dd[i]
        xi = xs[i]
        new = [mpq(0)] * (len(cs) + 1)
        for k, c in enumerate(cs):
            new[k + 1] += c
            new[k] -= c * xi
        new[0] += dd[i]
        cs = new
    return Poly._raw(cs)


def interpolate_values(values: Sequence, start: int = 0) -> Poly:
    """Interpolate values sampled at the consecutive integers start, start+1, ..."""
    return poly_interpolate([(start + i, v) for i, v in enumerate(values)])


class Series:
    """Power series in t with coefficients in Q[x], truncated at t**order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [Poly.coerce(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)

    def __add__(self, other: "Series") -> "Series":
        o = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], o)

    def __sub__(self, other: "Series") -> "Series":
        o = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], o)

    def __mul__(self, other: "Series") -> "Series":
        o = min(self.order, other.order)
        out = [ZERO] * (o + 1)
        for i in range(o + 1):
            ai = self.coeffs[i]
            if ai.is_zero():
                continue
            for j in range(o + 1 - i):
                out[i + j] = out[i + j] + ai * other.coeffs[j]
        return Series(out, o)

    def __pow__(self, e: int) -> "Series":
        result = Series([ONE], self.order)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __getitem__(self, k: int) -> Poly:
        return self.coeffs[k]

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"


def series_quotient(num: Series, den: Series, order: int) -> Series:
    """Truncated quotient num/den; den's t**0 coefficient must be a nonzero constant."""
    d0 = den.coeffs[0]
    if d0.is_zero() or not d0.is_constant():
        raise NonUnitConstantTerm(f"constant term {d0} is not a unit of Q[x]")
    inv = 1 / d0.coeffs[0]
    a = list(num.coeffs) + [ZERO] * max(0, order + 1 - len(num.coeffs))
    d = list(den.coeffs) + [ZERO] * max(0, order + 1 - len(den.coeffs))
    q: list[Poly] = []
    for k in range(order + 1):
        acc = a[k]
        for i in range(1, k + 1):
            if not d[i].is_zero():
                acc = acc - d[i] * q[k - i]
        q.append(acc * inv)
    return Series(q, order)


def det_rational(rows: Sequence[Sequence]) -> Rational:
    """Exact determinant of a rational matrix.

    Each row is scaled to integers, then integer Bareiss elimination runs with
    exact floor division; the row scalings are divided back out at the end.
    """
    n = len(rows)
    if n == 0:
        return mpq(1)
    scale = mpz(1)
    m = []
    for row in rows:
        qs = [Q(v) for v in row]
        den = mpz(1)
        for v in qs:
            if v.denominator != 1:
                den = den * v.denominator // math.gcd(den, v.denominator)
        scale *= den
        m.append([mpz(v * den) for v in qs])
    d = det_integer(m)
    return mpq(d, 1) / scale


def det_integer(m: list) -> int:
    """Integer Bareiss with row pivoting; mutates its argument."""
    n = len(m)
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for s in range(k + 1, n):
                if m[s][k] != 0:
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return mpz(0)
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - lead * rowk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]
