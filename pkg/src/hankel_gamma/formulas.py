"""Printed coefficient formulas for the (2, 2) family, as functions of a concrete n.

Everything in this file is a transcription; nothing here is derived. The
verifiers in ``identities`` and ``closedform`` check each formula against
determinants computed from scratch. Every formula returns a Poly in x.
"""

from __future__ import annotations

from gmpy2 import mpq

from .exact import ONE, X, Poly
from .hankel import binom

x = X

# -- entry sequence identities ------------------------------------------------------


def first_identity_lhs_factor() -> Poly:
    """Multiplier of d/dx a_n in the differential-convolution identity."""
    return (x - 2) * x * (x + 2) * (3 * x + 2)


def first_identity_rhs(n: int) -> dict:
    """Coefficients of a_{n+2}, a_{n+1}, a_n, c_n, c_{n-1} on the right-hand side."""
    return {
        "a+2": 2 * n * (x - 1),
        "a+1": n * (x - 6) * (x - 2) + 3 * x**2 - 2 * x + 4,
        "a+0": -(3 * x**3 + 18 * x**2 - 20 * x + 24 + 4 * n * (x**2 + 4)),
        "c+0": 8 * (x - 1) ** 2,
        "c-1": -32 * (x - 1) ** 2,
    }


def second_identity(n: int) -> dict:
    """Coefficients of the derivative-free convolution identity (sum is zero)."""
    return {
        "a+2": n * x + 3 * x + 2,
        "a+1": -(n * x * (x + 6) + 3 * x**2 + 16 * x + 8),
        "a+0": 2 * x * (x + 2) * (2 * n + 5),
        "c+0": (x - 1) * (x - 2),
        "c-1": -4 * (x - 1) * (x - 2),
    }


def third_identity_weight(n: int, j: int) -> Poly:
    """Weight w_{n,j}(x) of the linear dependence among v_0, ..., v_{n+2}."""
    sign = -1 if (n - j) % 2 else 1
    b0 = binom(n + j + 2, 2 * j)
    b1 = binom(n + j + 2, 2 * j + 1)
    c0 = mpq(2 * (2 * n + 5), 2 * j + 1) * b0
    c1 = mpq((2 * n + 3) * (2 * n + 5), 2 * j + 1) * b0
    c2 = mpq((2 * n + 3) * (2 * n + 5), 2 * j + 3) * b1
    return Poly([c0, c1, c2]) * sign


# -- the five linear equations -------------------------------------------------------
# Each equation maps a partition label to its coefficient; the sum of
# coefficient * H_label vanishes.


def equation_1(n: int) -> dict:
    return {
        "2": 2 + 3 * x + 2 * n * x,
        "1^2": -(2 + x + 2 * n * x),
        "1": -(8 + 16 * x + 12 * n * x + 3 * x**2 + 2 * n * x**2),
        "0": 2 + 4 * n + 17 * x + 22 * n * x + 8 * n**2 * x + 11 * x**2 + 16 * n * x**2 + 4 * n**2 * x**2,
    }


def equation_2(n: int) -> dict:
    return {
        "3": 1 + 2 * x + n * x,
        "21": -(1 + x + n * x),
        "1^3": 1 + n * x,
        "2": -(4 + 11 * x + 6 * n * x + 2 * x**2 + n * x**2),
        "1^2": 4 + 5 * x + 6 * n * x + x**2 + n * x**2,
        "1": 2 + 11 * x + 8 * n * x + 8 * x**2 + 4 * n * x**2,
        "0": (x - 2) * (x - 1) * (n * x - 2),
    }


def equation_3(n: int) -> dict:
    return {
        "21": 2 + 3 * x + 2 * n * x,
        "1^3": -4 * (1 + n * x),
        "1^2": -4 * (4 + 5 * x + 6 * n * x + x**2 + n * x**2),
        "1": 4 * n - 2 + 3 * x + 6 * n * x + 8 * n**2 * x - x**2 + 8 * n * x**2 + 4 * n**2 * x**2,
        "0": -(x - 2) * (x - 1) * (2 * n * x - 4 - x),
    }


def equation_4(n: int) -> dict:
    return {
        "2": 2 + 3 * x + 2 * n * x,
        "1": -(10 + 4 * n + 15 * x + 16 * n * x + 4 * n**2 * x + 3 * x**2 + 2 * n * x**2),
        "0": (n + 1) * (2 * n + 5) * (2 + 3 * x + 2 * n * x + 2 * x**2),
    }


def equation_5(n: int) -> dict:
    return {
        "21": 3 * (2 + 3 * x + 2 * n * x),
        "1^2": -3 * (10 + 4 * n + 15 * x + 16 * n * x + 4 * n**2 * x + 3 * x**2 + 2 * n * x**2),
        "0": 2 * n * (1 + 2 * n) * (5 + 2 * n)
        + n * (1 + 2 * n) * (3 + 2 * n) * (5 + 2 * n) * x
        + 3 * n * (3 + 2 * n) * (5 + 2 * n) * x**2,
    }


EQUATIONS = (equation_1, equation_2, equation_3, equation_4, equation_5)

UNKNOWNS = ("3", "21", "1^3", "2", "1^2")


def matrix_M(n: int) -> list:
    """The 5x5 coefficient matrix as printed, columns ordered H_3, H_21, H_{1^3}, H_2, H_{1^2}."""
    z = Poly()
    return [
        [z, z, z, 2 * n * x + 3 * x + 2, -2 * n * x - x - 2],
        [
            n * x + 2 * x + 1,
            -n * x - x - 1,
            n * x + 1,
            -n * x**2 - 2 * x**2 - 6 * n * x - 11 * x - 4,
            n * x**2 + x**2 + 6 * n * x + 5 * x + 4,
        ],
        [z, 2 * n * x + 3 * x + 2, -4 * (n * x + 1), z, -4 * (n * x**2 + x**2 + 6 * n * x + 5 * x + 4)],
        [z, z, z, 2 * n * x + 3 * x + 2, z],
        [
            z,
            3 * (2 * n * x + 3 * x + 2),
            z,
            z,
            -3 * (4 * x * n**2 + 2 * x**2 * n + 16 * x * n + 4 * n + 3 * x**2 + 15 * x + 10),
        ],
    ]


def det_M_product(n: int) -> Poly:
    return 12 * (1 + n * x) * (1 + 2 * x + n * x) * (2 + x + 2 * n * x) * (2 + 3 * x + 2 * n * x) ** 2


# -- expansions of the five auxiliary determinants in H_0 and H_1 -------------------
# label -> (multiplier L, coefficient of H_0, coefficient of H_1) with
# L * H_label = P0 * H_0 + P1 * H_1.


def expansions(n: int) -> dict:
    h3 = (
        3 * (2 + 3 * x + 2 * n * x),
        -2
        * (n + 1)
        * (
            8 * x * n**3 + 12 * x**2 * n**2 + 64 * x * n**2 + 8 * n**2 + 6 * x**3 * n
            + 66 * x**2 * n + 162 * x * n + 52 * n + 15 * x**3 + 90 * x**2 + 126 * x + 84
        ),
        3
        * (
            4 * x * n**3 + 4 * x**2 * n**2 + 32 * x * n**2 + 4 * n**2 + 2 * x**3 * n
            + 18 * x**2 * n + 81 * x * n + 26 * n + 3 * x**3 + 18 * x**2 + 63 * x + 42
        ),
    )
    h21 = (
        3 * (2 + x + 2 * n * x) * (2 + 3 * x + 2 * n * x),
        -64 * x**2 * n**5 - 48 * x**3 * n**4 - 416 * x**2 * n**4 - 128 * x * n**4
        - 192 * x**3 * n**3 - 1040 * x**2 * n**3 - 704 * x * n**3 - 64 * n**3
        + 12 * x**4 * n**2 - 192 * x**3 * n**2 - 1192 * x**2 * n**2 - 1360 * x * n**2
        - 288 * n**2 + 24 * x**4 * n + 24 * x**3 * n - 480 * x**2 * n - 1120 * x * n
        - 416 * n + 9 * x**4 + 63 * x**3 + 48 * x**2 - 300 * x - 240,
        3
        * (4 * x * n**2 + 4 * x * n + 4 * n - x + 2)
        * (4 * x * n**2 + 2 * x**2 * n + 16 * x * n + 4 * n + 3 * x**2 + 15 * x + 10),
    )
    h111 = (
        3 * (2 + x + 2 * n * x),
        -16 * x * n**4 - 32 * x * n**3 - 16 * n**3 + 28 * x * n**2 - 24 * n**2
        - 6 * x**3 * n - 12 * x**2 * n + 80 * x * n + 16 * n - 3 * x**3 - 12 * x**2 + 12 * x + 48,
        3 * (4 * x * n**3 + 4 * n**2 + 2 * x**2 * n - 9 * x * n - 2 * n + x**2 - 4),
    )
    h2 = (
        2 + 3 * x + 2 * n * x,
        -(n + 1) * (2 * n + 5) * (2 * x**2 + 2 * n * x + 3 * x + 2),
        4 * x * n**2 + 2 * x**2 * n + 16 * x * n + 4 * n + 3 * x**2 + 15 * x + 10,
    )
    h11 = (
        2 + x + 2 * n * x,
        -4 * x * n**3 - 12 * x * n**2 - 4 * n**2 + 2 * x**2 * n - 9 * x * n - 10 * n + x**2 + 2 * x - 8,
        4 * x * n**2 + 4 * x * n + 4 * n - x + 2,
    )
    return {"3": h3, "21": h21, "1^3": h111, "2": h2, "1^2": h11}


# -- first-order system and second-order equation ------------------------------------


def Q_coeffs(n: int) -> tuple:
    Qp = (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2)
    Q0 = -(n + 1) * (
        16 * x**2 * n**3 + 4 * x**3 * n**2 + 48 * x**2 * n**2 + 32 * x * n**2 + 8 * x**3 * n
        + 36 * x**2 * n + 80 * x * n + 16 * n + 3 * x**3 + 12 * x**2 + 12 * x + 48
    )
    Q1 = (2 * n + 3) * (4 * n**2 * x**2 + 4 * n * x**2 + x**2 + 8 * n * x + 4)
    return Qp, Q0, Q1


def U_coeffs(n: int) -> tuple:
    Up = (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2)
    U0 = -2 * (n + 1) * (
        16 * x**2 * n**4 + 8 * x**3 * n**3 + 72 * x**2 * n**3 + 32 * x * n**3
        + 28 * x**3 * n**2 + 116 * x**2 * n**2 + 112 * x * n**2 + 16 * n**2 + 26 * x**3 * n
        + 86 * x**2 * n + 104 * x * n + 56 * n + 7 * x**3 + 22 * x**2 + 20 * x + 56
    )
    U1 = (
        16 * x**2 * n**4 + 4 * x**3 * n**3 + 64 * x**2 * n**3 + 32 * x * n**3
        + 12 * x**3 * n**2 + 92 * x**2 * n**2 + 80 * x * n**2 + 16 * n**2 + 11 * x**3 * n
        + 56 * x**2 * n + 44 * x * n + 32 * n + 3 * x**3 + 10 * x**2 - 4 * x + 24
    )
    return Up, U0, U1


def R_coeffs(n: int) -> tuple:
    Rp = (x - 2) ** 2 * (x + 2) ** 2 * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2)
    R0 = (n + 1) * (
        4 * n**3 * x**4 + 16 * n**2 * x**4 + 19 * n * x**4 + 6 * x**4 + 32 * n**3 * x**3
        + 96 * n**2 * x**3 + 64 * n * x**3 + 18 * x**3 - 48 * n**3 * x**2 + 240 * n * x**2
        + 48 * x**2 + 128 * n**3 * x + 288 * n**2 * x + 160 * n * x + 264 * x + 128 * n**2
        + 208 * n - 96
    )
    R1 = -2 * (2 * n + 3) * (
        4 * n**2 * x**3 + 4 * n * x**3 + x**3 - 4 * n**2 * x**2 + 8 * n * x**2 - x**2
        + 16 * n**2 * x + 8 * n * x + 12 * x + 16 * n - 4
    )
    return Rp, R0, R1


def ode_gcd(n: int) -> Poly:
    return (2 * n + 3) * (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2)


def S_coeffs(n: int) -> tuple:
    S2 = (x - 2) * (x + 2) * (4 * n**2 * x**2 + 4 * n * x**2 + x**2 + 8 * n * x + 4)
    S1 = 2 * (
        4 * n**2 * x**3 + 4 * n * x**3 + x**3 - 4 * n**2 * x**2 + 8 * n * x**2 - x**2
        + 16 * n**2 * x + 8 * n * x + 12 * x + 16 * n - 4
    )
    S0 = -n * (n + 1) * (4 * n**2 * x**2 + 4 * n * x**2 + x**2 + 8 * n * x - 8 * x + 36)
    return S2, S1, S0


# -- three-term recursion in n ---------------------------------------------------------


def recursion_coeffs(n: int) -> tuple:
    """Coefficients of H(n+2), H(n+1), H(n) in the three-term relation."""
    c2 = (2 + (2 * n + 3) * x) ** 2
    c1 = x * (4 + 4 * (2 * n + 3) * x + (2 * n + 3) * (2 * n + 5) * x**2)
    c0 = (2 + (2 * n + 5) * x) ** 2
    return c2, c1, c0


def genfun_numerator() -> list:
    """t-coefficients of 1 - t + t^2 - t^3 - x t - 3 x t^2."""
    return [ONE, -1 - x, 1 - 3 * x, Poly([-1])]


def genfun_denominator_base() -> list:
    """t-coefficients of 1 + x t + t^2 (squared in the generating function)."""
    return [ONE, x, ONE]
