"""Closed forms, series and recurrences for H_0(n, x) of the (2, 2) family.

Every check compares an explicit formula against the determinant itself,
never against another closed form.
"""

from __future__ import annotations

import functools
import math
from enum import Enum

from gmpy2 import mpq

from . import formulas as F
from .exact import ONE, ZERO, Poly, Series, det_rational, series_quotient
from .hankel import FAMILY_22, binom, entry_poly, hankel_minors, shifted_hankel_det

FAM = FAMILY_22


class ClosedFormId(str, Enum):
    THM1_AT2 = "THM1_AT2"
    THM1_ATM2 = "THM1_ATM2"
    HNATM2 = "HNATM2"
    HNAT2 = "HNAT2"
    SOL_AT0 = "SOL_AT0"
    GF = "GF"
    RECURSION = "RECURSION"
    X2 = "X2"
    XM2 = "XM2"
    M1 = "M1"
    X1_MOD3 = "X1_MOD3"
    AK2 = "AK2"
    PFAFF = "PFAFF"
    BK = "BK"
    DK = "DK"
    EK = "EK"
    REL1 = "REL1"
    REL2 = "REL2"


@functools.lru_cache(maxsize=8)
def _minors(n_max: int) -> tuple:
    return tuple(hankel_minors(FAM, n_max))


def determinant_list(n_max: int) -> list[Poly]:
    """H_0(0..n_max, x) by one fraction-free elimination pass."""
    return list(_minors(n_max))


def H(n: int) -> Poly:
    return shifted_hankel_det(FAM, n, ())


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


# -- expansions ----------------------------------------------------------------------


def _centered(coeffs: list, center: int) -> Poly:
    """sum_k coeffs[k] (x - center)^k as a Poly in x."""
    return Poly(coeffs).shift(-center)


def _thm1_coeffs(n: int, center: int, form: str) -> list:
    if center == 2 and form == "binomial":
        return [
            _sign(n) * ((2 * n + 3) * binom(n + k, 2 * k + 1) + (2 * k + 1) * binom(n + k + 1, 2 * k + 1))
            for k in range(n + 1)
        ]
    if center == 2 and form == "rational":
        return [
            _sign(n) * mpq(2 * n * n + 4 * n + 2 * k * k + 1, 2 * k + 1) * binom(n + k, 2 * k)
            for k in range(n + 1)
        ]
    if center == -2 and form == "binomial":
        return [
            _sign(k)
            * (
                (n + k + 1) * binom(n + k, 2 * k)
                + (2 * n + 4 * k + 1) * binom(n + k, 2 * k + 1)
                + 8 * (k + 1) * binom(n + k + 1, 2 * k + 3)
            )
            for k in range(n + 1)
        ]
    if center == -2 and form == "rational":
        return [
            _sign(k)
            * (2 * n + 3)
            * mpq(2 * n * n + 2 * k * k + 4 * k + 1, (2 * k + 1) * (2 * k + 3))
            * binom(n + k, 2 * k)
            for k in range(n + 1)
        ]
    raise ValueError(f"unknown expansion center={center} form={form}")


def thm1_expansion(n: int, center: int, form: str = "binomial") -> Poly:
    """Almost-product expansion of H_0(n, x) around x = center (+2 or -2)."""
    return _centered(_thm1_coeffs(n, center, form), center)


def thm1_at_zero(n: int, center: int) -> int:
    """The center-c binomial expansion evaluated at x = 0."""
    return sum(c * (-center) ** k for k, c in enumerate(_thm1_coeffs(n, center, "binomial")))


def solution_at0_coeff(n: int, k: int) -> int:
    e = n * (n - 1) // 2 + k * (k - 1) // 2 + k * n
    num = math.factorial(n - (n - k + 1) // 2)
    den = math.factorial((n - k) // 2) * math.factorial(k)
    return _sign(e) * (2 * k + _sign(n - k)) * mpq(num, den)


def solution_at0(n: int) -> Poly:
    return Poly([solution_at0_coeff(n, k) for k in range(n + 1)])


# -- generating function and recursion -----------------------------------------------


def genfun_series(order: int) -> Series:
    num = Series(F.genfun_numerator(), order)
    base = Series(F.genfun_denominator_base(), order)
    return series_quotient(num, base * base, order)


def genfun_check(order: int) -> bool:
    s = genfun_series(order)
    dets = determinant_list(order)
    return all(s[n] == dets[n] for n in range(order + 1))


def recursion_residual(n: int, dets: list | None = None) -> Poly:
    dets = dets or determinant_list(n + 2)
    c2, c1, c0 = F.recursion_coeffs(n)
    return c2 * dets[n + 2] + c1 * dets[n + 1] + c0 * dets[n]


def recursion_check(n_max: int) -> bool:
    dets = determinant_list(n_max + 2)
    return all(recursion_residual(n, dets).is_zero() for n in range(n_max + 1))


# -- special values --------------------------------------------------------------------


def special_closed_form(n: int, x0) -> mpq:
    x0 = mpq(x0)
    if x0 == 2:
        return mpq(_sign(n) * (2 * n * n + 4 * n + 1))
    if x0 == -2:
        return mpq((2 * n + 3) * (1 + 2 * n * n), 3)
    if x0 == 0:
        return mpq(_sign(n * (n + 1) // 2))
    if x0 == 1:
        r = n % 3
        if r == 0:
            return mpq(2 * n + 3, 3)
        if r == 1:
            return mpq(-4 * (n + 2), 3)
        return mpq(2 * n + 5, 3)
    raise ValueError(f"no closed form at x = {x0}")


def determinant_at(n: int, x0) -> mpq:
    """det[a_{i+j}(x0)] from the evaluated entries."""
    vals = [entry_poly(FAM, k)(mpq(x0)) for k in range(2 * n + 1)]
    return det_rational([[vals[i + j] for j in range(n + 1)] for i in range(n + 1)])


def special_value(n: int, x0) -> tuple[mpq, mpq]:
    """(determinant at x0, closed form at x0) for x0 in {2, -2, 0, 1}."""
    closed = special_closed_form(n, x0)
    return determinant_at(n, x0), closed


def ak_at2(k: int) -> int:
    return 4 ** (k + 1) - binom(2 * k + 3, k + 1)


def ak_at2_identity(k_max: int) -> bool:
    return all(entry_poly(FAM, k)(2) == ak_at2(k) for k in range(k_max + 1))


# -- Pfaffian-type identity --------------------------------------------------------------


def pfaff_residual(n: int) -> Poly:
    h = lambda lam: shifted_hankel_det(FAM, n, lam)  # noqa: E731
    lhs = H(n - 1) * H(n + 1)
    h0, h1 = h(()), h((1,))
    return lhs - (h0 * h((2,)) + h0 * h((1, 1)) - h1 * h1)


def pfaff_check(n: int, x_samples=None) -> bool:
    """Exact polynomial check; with x_samples, evaluate entries at those points instead."""
    if n < 1:
        raise ValueError("the Pfaffian identity needs n >= 1")
    if not x_samples:
        return pfaff_residual(n).is_zero()
    from .hankel import Partition, shifted_matrix

    def at(size: int, lam, x0):
        m = shifted_matrix(FAM, size, Partition(tuple(lam)))
        return det_rational([[e(x0) for e in row] for row in m.rows])

    for x0 in x_samples:
        x0 = mpq(x0)
        h0, h1 = at(n, (), x0), at(n, (1,), x0)
        lhs = at(n - 1, (), x0) * at(n + 1, (), x0)
        if lhs != h0 * at(n, (2,), x0) + h0 * at(n, (1, 1), x0) - h1 * h1:
            return False
    return True


# -- series recurrences --------------------------------------------------------------------


def series_coefficients(n: int, center: int) -> list:
    """Coefficients of H_0(n, x) in powers of (x - center)."""
    p = H(n).shift(center)
    return [p.coeff(k) for k in range(n + 1)]


def _bk_residual(n, k, b):
    lhs = 16 * k * (2 * k + 1) * (2 * n * n + 4 * n + 1) * b(k)
    c1 = 8 * (
        2 * n**4 + 6 * n**3 - 10 * k**2 * n**2 + 18 * k * n**2 - n**2
        - 16 * k**2 * n + 26 * k * n - 7 * n - 3 * k**2 + 4 * k - 1
    )
    c2 = 2 * (
        8 * n**4 + 20 * n**3 - 16 * k**2 * n**2 + 60 * k * n**2 - 46 * n**2
        - 20 * k**2 * n + 68 * k * n - 58 * n - 4 * k**2 + 15 * k - 14
    )
    c3 = (n + 3 - k) * (k + n - 2) * (2 * n + 1) ** 2
    return lhs - (c1 * b(k - 1) + c2 * b(k - 2) + c3 * b(k - 3))


def _dk_residual(n, k, d):
    lhs = 16 * k * (2 * k + 3) * (2 * n * n + 1) * d(k)
    c1 = -8 * (
        2 * n**4 + 2 * n**3 - 10 * k**2 * n**2 + 10 * k * n**2 + 7 * n**2
        - 4 * k**2 * n + 6 * k * n + 5 * n - 3 * k**2 + 2 * k + 1
    )
    c2 = 2 * (
        8 * n**4 + 12 * n**3 - 16 * k**2 * n**2 + 52 * k * n**2 - 30 * n**2
        - 12 * k**2 * n + 44 * k * n - 34 * n - 4 * k**2 + 13 * k - 10
    )
    c3 = (k - n - 3) * (k + n - 2) * (2 * n + 1) ** 2
    return lhs - (c1 * d(k - 1) + c2 * d(k - 2) + c3 * d(k - 3))


def _ek_residual(n, k, e):
    lhs = 16 * k * (k - 1) * e(k)
    c1 = -8 * (k - 1) * (4 * k * n - 12 * n + 1)
    c2 = -4 * (
        4 * n**2 * k**2 + 4 * n * k**2 - 28 * n**2 * k - 24 * n * k - 6 * k + 49 * n**2 + 41 * n + 12
    )
    c3 = -2 * (4 * n**3 + 4 * k * n**2 - 12 * n**2 - 4 * k**2 * n + 20 * k * n - 28 * n + k - 3)
    c4 = (k - n - 4) * (k + n - 3) * (2 * n + 1) ** 2
    return lhs - (c1 * e(k - 1) + c2 * e(k - 2) + c3 * e(k - 3) + c4 * e(k - 4))


_SERIES = {"BK": (2, _bk_residual), "DK": (-2, _dk_residual), "EK": (0, _ek_residual)}


def rel1_holds(n: int) -> bool:
    b = series_coefficients(n, 2) + [0]
    return b[1] == mpq(n * (n + 1) * (2 * n * n + 4 * n + 3), 6 * (2 * n * n + 4 * n + 1)) * b[0]


def rel2_holds(n: int) -> bool:
    d = series_coefficients(n, -2) + [0]
    return d[1] == -mpq(n * (1 + n) * (7 + 2 * n * n), 10 * (1 + 2 * n * n)) * d[0]


def bk_closed_form(n: int, k: int) -> mpq:
    """b_k / b_0 as an explicit rational."""
    return mpq(2 * n * n + 4 * n + 2 * k * k + 1, (2 * n * n + 4 * n + 1) * (2 * k + 1)) * binom(n + k, 2 * k)


def dk_closed_form(n: int, k: int) -> mpq:
    """d_k / d_0 as an explicit rational."""
    return (
        _sign(k)
        * mpq(3 * (2 * n * n + 2 * k * k + 4 * k + 1), (1 + 2 * n * n) * (2 * k + 1) * (2 * k + 3))
        * binom(n + k, 2 * k)
    )


def series_recurrence_check(n: int, which: str) -> bool:
    """Recurrence for the expansion coefficients around the matching center for
    2 <= k <= n + 3, plus the first-coefficient relation and closed forms."""
    if n < 1:
        raise ValueError("series recurrences need n >= 1")
    center, residual = _SERIES[str(which.value if isinstance(which, Enum) else which)]
    cs = series_coefficients(n, center)
    coef = lambda j: cs[j] if 0 <= j < len(cs) else 0  # noqa: E731
    if any(residual(n, k, coef) != 0 for k in range(2, n + 4)):
        return False
    if center == 2:
        return rel1_holds(n) and all(coef(k) == bk_closed_form(n, k) * coef(0) for k in range(n + 1))
    if center == -2:
        return rel2_holds(n) and all(coef(k) == dk_closed_form(n, k) * coef(0) for k in range(n + 1))
    return coef(0) == _sign(n * (n + 1) // 2)


# -- batch verification ----------------------------------------------------------------------


def verify_closed_forms(n_max: int = 25) -> list[dict]:
    """One record per (id, n); status pass/fail."""
    dets = determinant_list(max(n_max, 2) + 2)
    out = []

    def rec(cid, n, ok, **extra):
        out.append({"id": cid.value, "n": n, "status": "pass" if ok else "fail", **extra})

    for n in range(n_max + 1):
        h = dets[n]
        rec(ClosedFormId.THM1_AT2, n, thm1_expansion(n, 2, "binomial") == h)
        rec(ClosedFormId.THM1_ATM2, n, thm1_expansion(n, -2, "binomial") == h)
        rec(ClosedFormId.HNATM2, n, thm1_expansion(n, 2, "rational") == h)
        rec(ClosedFormId.HNAT2, n, thm1_expansion(n, -2, "rational") == h)
        rec(ClosedFormId.SOL_AT0, n, solution_at0(n) == h)
        rec(ClosedFormId.RECURSION, n, recursion_residual(n, dets).is_zero())
        for cid, x0 in ((ClosedFormId.X2, 2), (ClosedFormId.XM2, -2), (ClosedFormId.M1, 0), (ClosedFormId.X1_MOD3, 1)):
            computed = h(x0)
            closed = special_closed_form(n, x0)
            rec(cid, n, computed == closed, computed=str(computed), closed_form=str(closed))
        rec(ClosedFormId.AK2, n, entry_poly(FAM, n)(2) == ak_at2(n))
        if n >= 1:
            for cid in (ClosedFormId.BK, ClosedFormId.DK, ClosedFormId.EK):
                rec(cid, n, series_recurrence_check(n, cid.value))
            rec(ClosedFormId.REL1, n, rel1_holds(n))
            rec(ClosedFormId.REL2, n, rel2_holds(n))
        if 1 <= n <= 8:
            rec(ClosedFormId.PFAFF, n, pfaff_check(n))
    rec(ClosedFormId.GF, n_max, genfun_check(n_max))
    return out


def evaluate(n: int, x0) -> dict:
    """Determinant and every closed form that applies, at a single rational x0."""
    x0 = mpq(x0)
    out = {
        "n": n,
        "x": str(x0),
        "determinant": str(determinant_at(n, x0)),
        "thm1_at2": str(thm1_expansion(n, 2)(x0)),
        "thm1_atm2": str(thm1_expansion(n, -2)(x0)),
        "solution_at0": str(solution_at0(n)(x0)),
    }
    if x0 in (2, -2, 0, 1):
        out["special_value"] = str(special_closed_form(n, x0))
    return out


__all__ = [name for name in dir() if not name.startswith("_")] + ["ONE", "ZERO"]
