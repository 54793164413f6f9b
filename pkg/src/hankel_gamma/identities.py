"""Exact verification of the (2, 2)-family identities, equations and ODE, one n at a time."""

from __future__ import annotations

import random
from dataclasses import dataclass

from gmpy2 import mpq

from . import formulas as F
from .errors import IndexOutOfRange, NTooSmall, SingularSystem
from .exact import ZERO, Poly, poly_gcd
from .hankel import FAMILY_22, PolyMatrix, convolution_poly, det_bareiss, entry_poly, shifted_hankel_det

FAM = FAMILY_22


@dataclass(frozen=True)
class IdentityResidual:
    n: int
    name: str
    residual: Poly

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "residual": self.residual.to_json(),
        }


@dataclass(frozen=True)
class CoefficientSet:
    Q: Poly
    Q0: Poly
    Q1: Poly
    U: Poly
    U0: Poly
    U1: Poly
    R: Poly
    R0: Poly
    R1: Poly
    S2: Poly
    S1: Poly
    S0: Poly
    residuals: tuple = ()


def H(n: int, lam="0") -> Poly:
    return shifted_hankel_det(FAM, n, _parts(lam))


def _parts(lam) -> tuple:
    from .hankel import Partition

    return Partition.parse(lam).parts


def a(k: int) -> Poly:
    return entry_poly(FAM, k)


def c(k: int) -> Poly:
    return convolution_poly(FAM, k)


def _terms(coeffs: dict, n: int) -> Poly:
    seq = {"a+2": a(n + 2), "a+1": a(n + 1), "a+0": a(n), "c+0": c(n), "c-1": c(n - 1)}
    total = ZERO
    for key, coef in coeffs.items():
        total = total + coef * seq[key]
    return total


# -- identities on the entry sequence -------------------------------------------------


def first_identity_residual(n: int) -> IdentityResidual:
    lhs = F.first_identity_lhs_factor() * a(n).derivative()
    return IdentityResidual(n, "FI", lhs - _terms(F.first_identity_rhs(n), n))


def verify_first_identity(n_max: int) -> list[IdentityResidual]:
    return [first_identity_residual(n) for n in range(n_max + 1)]


def second_identity_residual(n: int) -> IdentityResidual:
    return IdentityResidual(n, "SI", _terms(F.second_identity(n), n))


def verify_second_identity(n_max: int) -> list[IdentityResidual]:
    return [second_identity_residual(n) for n in range(n_max + 1)]


def ti_weight(n: int, j: int) -> Poly:
    if not 0 <= j <= n + 2:
        raise IndexOutOfRange(f"weight index j={j} outside 0..{n + 2}")
    return F.third_identity_weight(n, j)


def verify_third_identity(n: int) -> IdentityResidual:
    """Every row sum over j of w_{n,j} a_{i+j}, i = 0..n, must vanish."""
    weights = [ti_weight(n, j) for j in range(n + 3)]
    worst = ZERO
    for i in range(n + 1):
        row = ZERO
        for j, w in enumerate(weights):
            row = row + w * a(i + j)
        if not row.is_zero() and (worst.is_zero() or row.degree > worst.degree):
            worst = row
    return IdentityResidual(n, "TI", worst)


def weight_relation_residual(n: int, k: int, sign: int | None = None) -> Poly:
    """w_{n,n+2} H_{21^k} + w_{n,n+1} H_{1^{k+1}} + sign * w_{n,n-k} H_0.

    The relation holds with sign = (-1)^k, the default.
    """
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 0..{n}")
    if sign is None:
        sign = -1 if k % 2 else 1
    lam_a = (2,) + (1,) * k
    lam_b = (1,) * (k + 1)
    return (
        ti_weight(n, n + 2) * H(n, lam_a)
        + ti_weight(n, n + 1) * H(n, lam_b)
        + ti_weight(n, n - k) * H(n, "0") * sign
    )


def kernel_membership_check(n: int, seed: int = 0, samples: int = 3) -> bool:
    """Weights at random x lie in the right kernel of [v_0 ... v_{n+2}], and the
    three-term weight relation holds for every k = 0..n."""
    rng = random.Random(seed)
    for _ in range(samples):
        x0 = mpq(rng.randint(-10**4, 10**4), rng.randint(1, 10**4))
        w = [ti_weight(n, j)(x0) for j in range(n + 3)]
        vals = [a(k)(x0) for k in range(2 * n + 3)]
        for i in range(n + 1):
            if sum((w[j] * vals[i + j] for j in range(n + 3)), mpq(0)) != 0:
                return False
    return all(weight_relation_residual(n, k).is_zero() for k in range(n + 1))


# -- five equations and the linear system ----------------------------------------------


def _require_n2(n: int):
    if n < 2:
        raise NTooSmall(f"the five-equation system needs n >= 2, got {n}")


def build_five_equations(n: int) -> list[IdentityResidual]:
    _require_n2(n)
    out = []
    for idx, eq in enumerate(F.EQUATIONS, start=1):
        total = ZERO
        for lam, coef in eq(n).items():
            total = total + coef * H(n, lam)
        out.append(IdentityResidual(n, f"EQ{idx}", total))
    return out


def equation_forms(n: int) -> list[tuple[list[Poly], Poly, Poly]]:
    """For each equation: (row over the five unknowns, -coef of H_0, -coef of H_1)."""
    rows = []
    for eq in F.EQUATIONS:
        coeffs = eq(n)
        row = [coeffs.get(lam, ZERO) for lam in F.UNKNOWNS]
        rows.append((row, -coeffs.get("0", ZERO), -coeffs.get("1", ZERO)))
    return rows


def build_M(n: int) -> tuple[PolyMatrix, list[Poly]]:
    """M as printed and b = (moved H_0 and H_1 terms) with the determinants substituted."""
    _require_n2(n)
    M = PolyMatrix(F.matrix_M(n))
    h0, h1 = H(n, "0"), H(n, "1")
    b = [b0 * h0 + b1 * h1 for _, b0, b1 in equation_forms(n)]
    return M, b


def det_M_residual(n: int) -> IdentityResidual:
    M, _ = build_M(n)
    return IdentityResidual(n, "DETM", det_bareiss(M) - F.det_M_product(n))


def _cramer_numerators(M: PolyMatrix, rhs: list[Poly]) -> list[Poly]:
    return [det_bareiss(M.with_column(k, rhs)) for k in range(M.size)]


def solve_expansions(n: int) -> dict:
    """Solve M u = b by Cramer's rule and exact division.

    Returns label -> H_label(n, x). Raises SingularSystem when
    det(M) vanishes identically; consistency with the printed expansions and
    with direct determinants is reported by expansion_residuals.
    """
    M, b = build_M(n)
    dM = det_bareiss(M)
    if dM.is_zero():
        raise SingularSystem(f"det(M) vanishes at n={n}")
    nums = _cramer_numerators(M, b)
    return {lam: num.exact_div(dM) for lam, num in zip(F.UNKNOWNS, nums)}


def expansion_residuals(n: int) -> list[IdentityResidual]:
    """Printed expansions against direct determinants, and against Cramer's rule
    with H_0 and H_1 kept symbolic (cross-multiplied)."""
    _require_n2(n)
    h0, h1 = H(n, "0"), H(n, "1")
    printed = F.expansions(n)
    M = PolyMatrix(F.matrix_M(n))
    dM = det_bareiss(M)
    forms = equation_forms(n)
    num0 = _cramer_numerators(M, [f[1] for f in forms])
    num1 = _cramer_numerators(M, [f[2] for f in forms])
    solved = solve_expansions(n)
    names = {"3": "EXP_H3", "21": "EXP_H21", "1^3": "EXP_H111", "2": "EXP_H2", "1^2": "EXP_H11"}
    out = []
    for k, lam in enumerate(F.UNKNOWNS):
        L, P0, P1 = printed[lam]
        direct = H(n, lam)
        r = L * direct - P0 * h0 - P1 * h1
        out.append(IdentityResidual(n, names[lam], r))
        out.append(IdentityResidual(n, names[lam] + "_CRAMER0", num0[k] * L - P0 * dM))
        out.append(IdentityResidual(n, names[lam] + "_CRAMER1", num1[k] * L - P1 * dM))
        out.append(IdentityResidual(n, names[lam] + "_SOLVED", solved[lam] - direct))
    return out


# -- derivatives and the ODE --------------------------------------------------------------


def derivative_system(n: int) -> CoefficientSet:
    Qp, Q0, Q1 = F.Q_coeffs(n)
    Up, U0, U1 = F.U_coeffs(n)
    Rp, R0, R1 = F.R_coeffs(n)
    S2, S1, S0 = F.S_coeffs(n)
    h0, h1 = H(n, "0"), H(n, "1")
    d0, d1 = h0.derivative(), h1.derivative()
    residuals = (
        IdentityResidual(n, "DH0", Qp * d0 - Q0 * h0 - Q1 * h1),
        IdentityResidual(n, "DH1", Up * d1 - U0 * h0 - U1 * h1),
        IdentityResidual(n, "D2H0", Rp * d0.derivative() - R0 * h0 - R1 * h1),
    )
    return CoefficientSet(Qp, Q0, Q1, Up, U0, U1, Rp, R0, R1, S2, S1, S0, residuals)


def verify_ode(n: int) -> IdentityResidual:
    S2, S1, S0 = F.S_coeffs(n)
    h0 = H(n, "0")
    d1 = h0.derivative()
    return IdentityResidual(n, "ODE", S2 * d1.derivative() + S1 * d1 + S0 * h0)


def ode_derivation_residuals(n: int) -> list[IdentityResidual]:
    """Eliminate H_1 between the first and second derivative relations, divide by
    the common factor and compare with the printed S_2, S_1, S_0."""
    Qp, Q0, Q1 = F.Q_coeffs(n)
    Rp, R0, R1 = F.R_coeffs(n)
    S2, S1, S0 = F.S_coeffs(n)
    e2, e1, e0 = Q1 * Rp, -(R1 * Qp), R1 * Q0 - Q1 * R0
    g = F.ode_gcd(n)
    out = [IdentityResidual(n, "GCD", poly_gcd(poly_gcd(e2, e1), e0) - g.monic())]
    for name, e, s in (("S2", e2, S2), ("S1", e1, S1), ("S0", e0, S0)):
        out.append(IdentityResidual(n, name, e.exact_div(g) - s))
    return out


def all_residuals(n: int) -> list[IdentityResidual]:
    """Every per-n check that applies at this n."""
    out = [first_identity_residual(n), second_identity_residual(n), verify_third_identity(n)]
    out.append(IdentityResidual(n, "ODE", verify_ode(n).residual))
    if n >= 2:
        out += build_five_equations(n)
        out.append(det_M_residual(n))
        out += expansion_residuals(n)
        out += list(derivative_system(n).residuals)
        out += ode_derivation_residuals(n)
    return out
