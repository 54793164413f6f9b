"""Real-root counting and isolation for H_0(n, x) by Sturm chains and exact bisection."""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import EndpointIsRoot
from .exact import Poly, format_rational, poly_gcd
from .hankel import FAMILY_22, shifted_hankel_det

LOWER, UPPER = mpq(-2), mpq(2)
DEFAULT_WIDTH = mpq(1, 10**6)


@dataclass(frozen=True, order=True)
class Interval:
    lo: mpq
    hi: mpq

    def __post_init__(self):
        object.__setattr__(self, "lo", mpq(self.lo))
        object.__setattr__(self, "hi", mpq(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    @property
    def mid(self) -> mpq:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}


@dataclass
class RootReport:
    n: int
    isolating_intervals: list[Interval] = field(default_factory=list)
    poly: Poly | None = None

    def decimals(self, digits: int = 3, mode: str = "round") -> list[str]:
        """Each root to `digits` places, refining until the interval decides the digits.

        mode "round" is half-up rounding; "truncate" drops digits toward zero.
        """
        fmt = round_rational if mode == "round" else truncate_rational
        out = []
        for k, iv in enumerate(self.isolating_intervals):
            while fmt(iv.lo, digits) != fmt(iv.hi, digits):
                if self.poly is None:
                    break
                iv = _bisect_once(self.poly, iv)
                self.isolating_intervals[k] = iv
            out.append(fmt(iv.mid, digits))
        return out


def _decimal_text(v: int, digits: int) -> str:
    sign = "-" if v < 0 else ""
    whole, frac = divmod(abs(v), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def round_rational(q, digits: int) -> str:
    """Half-up decimal rounding of an exact rational."""
    return _decimal_text(int((mpq(q) * 10**digits + mpq(1, 2)).__floor__()), digits)


def truncate_rational(q, digits: int) -> str:
    """Decimal expansion of an exact rational cut after `digits` places."""
    q = mpq(q)
    v = int((abs(q) * 10**digits).__floor__())
    text = _decimal_text(v, digits)
    return "-" + text if q < 0 and v else text


# -- Sturm machinery -------------------------------------------------------------------


def sturm_chain(p: Poly) -> list[Poly]:
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.is_constant():
        return chain
    chain.append(p.derivative())
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            return chain
        chain.append(-r)


def _variations(chain: list[Poly], x0) -> int:
    signs = [s for s in ((c(x0) > 0) - (c(x0) < 0) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(chain: list[Poly], positive: bool) -> int:
    signs = []
    for c in chain:
        s = 1 if c.leading > 0 else -1
        if not positive and c.degree % 2:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, iv: Interval, chain: list[Poly] | None = None) -> int:
    """Distinct real roots of p in the open interval (lo, hi)."""
    for end in (iv.lo, iv.hi):
        if p(end) == 0:
            raise EndpointIsRoot(f"{format_rational(end)} is a root")
    chain = chain or sturm_chain(p)
    return _variations(chain, iv.lo) - _variations(chain, iv.hi)


def count_real_roots(p: Poly) -> int:
    chain = sturm_chain(p)
    return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)


def is_squarefree(p: Poly) -> bool:
    return sturm_chain(p)[-1].is_constant()


def _split_point(p: Poly, iv: Interval) -> mpq:
    mid = iv.mid
    nudge = iv.width / 1000
    while p(mid) == 0:
        mid += nudge
        nudge /= 2
    return mid


def _bisect_once(p: Poly, iv: Interval, chain=None) -> Interval:
    """Halve an isolating interval, keeping the half holding the root."""
    mid = _split_point(p, iv)
    left = Interval(iv.lo, mid)
    return left if count_roots(p, left, chain) == 1 else Interval(mid, iv.hi)


def isolate_poly_roots(p: Poly, lo=LOWER, hi=UPPER, width=DEFAULT_WIDTH) -> list[Interval]:
    """Disjoint sorted intervals, one per distinct root of p in (lo, hi), each narrower than width."""
    chain = sturm_chain(p)
    width = mpq(width)
    out = []
    stack = [Interval(lo, hi)]
    while stack:
        iv = stack.pop()
        k = count_roots(p, iv, chain)
        if k == 0:
            continue
        if k == 1:
            while iv.width > width:
                iv = _bisect_once(p, iv, chain)
            out.append(iv)
            continue
        mid = _split_point(p, iv)
        stack.append(Interval(iv.lo, mid))
        stack.append(Interval(mid, iv.hi))
    return sorted(out)


def H0(n: int) -> Poly:
    return shifted_hankel_det(FAMILY_22, n, ())


def isolate_roots(n: int, width=DEFAULT_WIDTH) -> RootReport:
    if n < 1:
        raise ValueError("isolate_roots needs n >= 1")
    if mpq(width) <= 0:
        raise ValueError("width must be positive")
    p = H0(n)
    return RootReport(n, isolate_poly_roots(p, LOWER, UPPER, width), p)


# -- interlacing ----------------------------------------------------------------------------


def interlaces(inner: Poly, outer: Poly, width=DEFAULT_WIDTH, max_refine: int = 200) -> bool:
    """True iff the real roots of `inner` lie strictly between consecutive roots of
    `outer`, one per gap, and each polynomial has only simple real roots in (-2, 2).

    Intervals are refined until disjoint; a common root is detected by GCD.
    """
    if not poly_gcd(inner, outer).is_constant():
        return False
    a = isolate_poly_roots(outer, LOWER, UPPER, width)
    b = isolate_poly_roots(inner, LOWER, UPPER, width)
    if len(a) != outer.degree or len(b) != inner.degree or len(a) != len(b) + 1:
        return False
    for _ in range(max_refine):
        merged = sorted([(iv, 0, k) for k, iv in enumerate(a)] + [(iv, 1, k) for k, iv in enumerate(b)])
        overlaps = [
            (x, y) for x, y in zip(merged, merged[1:]) if not x[0].hi < y[0].lo
        ]
        if not overlaps:
            return [tag for _, tag, _ in merged] == [0, 1] * len(b) + [0]
        for x, y in overlaps:
            for iv, tag, k in (x, y):
                if tag == 0:
                    a[k] = _bisect_once(outer, a[k])
                else:
                    b[k] = _bisect_once(inner, b[k])
    return False


def verify_interlacing(n_max: int) -> bool:
    """Roots of H_0(n) strictly interlace those of H_0(n+1) for 1 <= n < n_max."""
    if n_max < 2:
        raise ValueError("interlacing needs n_max >= 2")
    return all(interlaces(H0(n), H0(n + 1)) for n in range(1, n_max))


def recursion_sign_check(n: int) -> bool:
    """At each root of H_0(n+1), H_0(n) and H_0(n+2) have opposite signs."""
    mid_p, lo_p, hi_p = H0(n + 1), H0(n), H0(n + 2)
    for iv in isolate_poly_roots(mid_p):
        while count_roots(lo_p, iv) or count_roots(hi_p, iv):
            iv = _bisect_once(mid_p, iv)
        x0 = iv.mid
        if lo_p(x0) * hi_p(x0) >= 0:
            return False
    return True


# Table of zeros for H_0(1, x) through H_0(7, x); the digits are truncated, not rounded.
ZERO_TABLE = (
    ("-0.333",),
    ("-0.358", "0.558"),
    ("-0.601", "-0.194", "1.224"),
    ("-1.083", "-0.207", "0.324", "1.522"),
    ("-1.367", "-0.351", "-0.137", "0.815", "1.678"),
    ("-1.540", "-0.746", "-0.146", "0.229", "1.127", "1.768"),
    ("-1.651", "-1.028", "-0.246", "-0.107", "0.608", "1.333", "1.825"),
)


def zero_table_matches(mode: str = "truncate") -> list[tuple[int, tuple, tuple]]:
    """(n, printed, computed) for each table row that disagrees; empty when all match.

    A row also fails if any root lies 10^-3 or more from its printed value.
    """
    bad = []
    tol = mpq(1, 1000)
    for n, printed in enumerate(ZERO_TABLE, start=1):
        report = isolate_roots(n)
        got = tuple(report.decimals(3, mode))
        close = all(
            abs(iv.lo - mpq(t)) < tol and abs(iv.hi - mpq(t)) < tol
            for iv, t in zip(report.isolating_intervals, printed)
        )
        if got != printed or not close:
            bad.append((n, printed, got))
    return bad
