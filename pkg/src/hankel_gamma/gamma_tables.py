"""Transcribed gamma-operator evaluations on general Hankel matrices.

Each row pairs argument descriptors with a right-hand side written as
coef(n) * [a_sym] * H_lambda terms. Rows are grouped the way they are
printed: single arguments, then [a_{i+j+1}] first, [a_{i+j+2}] first, and
[a_{i+j+1}], [a_{i+j+1}] first.
"""

from __future__ import annotations

from .gamma import ConvShift as C
from .gamma import GammaTableEntry, Term
from .gamma import IndexWeightedShift as W
from .gamma import Shift as S


def T(coef, lam, sym=None):
    if isinstance(coef, int):
        value = coef
        coef = lambda n, v=value: v  # noqa: E731
    return Term(coef, lam, sym)


def _row(row_id, args, terms, text):
    return GammaTableEntry(row_id, tuple(args), tuple(terms), text)


TABLE_1 = [
    _row("1.01", [S(0)], [T(lambda n: n + 1, "0")], "(n+1) H_0"),
    _row("1.02", [S(1)], [T(1, "1")], "H_1"),
    _row("1.03", [S(2)], [T(1, "2"), T(-1, "1^2")], "H_2 - H_{1^2}"),
    _row("1.04", [S(3)], [T(1, "3"), T(-1, "21"), T(1, "1^3")], "H_3 - H_21 + H_{1^3}"),
    _row(
        "1.05",
        [S(4)],
        [T(1, "4"), T(-1, "31"), T(1, "21^2"), T(-1, "1^4")],
        "H_4 - H_31 + H_{21^2} - H_{1^4}",
    ),
    _row(
        "1.06",
        [S(5)],
        [T(1, "5"), T(-1, "41"), T(1, "31^2"), T(-1, "21^3"), T(1, "1^5")],
        "H_5 - H_41 + H_{31^2} - H_{21^3} + H_{1^5}",
    ),
    _row("1.07", [W(0)], [T(lambda n: n * (n + 1), "0")], "n(n+1) H_0"),
    _row("1.08", [W(1)], [T(lambda n: 2 * n, "1")], "2n H_1"),
    _row(
        "1.09",
        [W(2)],
        [T(lambda n: 2 * n, "2"), T(lambda n: -2 * (n - 1), "1^2")],
        "2n H_2 - 2(n-1) H_{1^2}",
    ),
    _row(
        "1.10",
        [W(3)],
        [T(lambda n: 2 * n, "3"), T(lambda n: -2 * (n - 1), "21"), T(lambda n: 2 * (n - 2), "1^3")],
        "2n H_3 - 2(n-1) H_21 + 2(n-2) H_{1^3}",
    ),
    _row(
        "1.11",
        [W(4)],
        [
            T(lambda n: 2 * n, "4"),
            T(lambda n: -2 * (n - 1), "31"),
            T(lambda n: 2 * (n - 2), "21^2"),
            T(lambda n: -2 * (n - 3), "1^4"),
        ],
        "2n H_4 - 2(n-1) H_31 + 2(n-2) H_{21^2} - 2(n-3) H_{1^4}",
    ),
    _row(
        "1.12",
        [W(5)],
        [
            T(lambda n: 2 * n, "5"),
            T(lambda n: -2 * (n - 1), "41"),
            T(lambda n: 2 * (n - 2), "31^2"),
            T(lambda n: -2 * (n - 3), "21^3"),
            T(lambda n: 2 * (n - 4), "1^5"),
        ],
        "2n H_5 - 2(n-1) H_41 + 2(n-2) H_{31^2} - 2(n-3) H_{21^3} + 2(n-4) H_{1^5}",
    ),
    _row("1.13", [C(-1)], [], "0"),
    _row("1.14", [C(0)], [T(lambda n: 2 * n + 1, "0", 0)], "(2n+1) a_0 H_0"),
    _row("1.15", [C(1)], [T(2, "1", 0), T(lambda n: 2 * n, "0", 1)], "2 a_0 H_1 + 2n a_1 H_0"),
    _row(
        "1.16",
        [C(2)],
        [T(2, "2", 0), T(-2, "1^2", 0), T(2, "1", 1), T(lambda n: 2 * n - 1, "0", 2)],
        "2 a_0 H_2 - 2 a_0 H_{1^2} + 2 a_1 H_1 + (2n-1) a_2 H_0",
    ),
    _row(
        "1.17",
        [C(3)],
        [
            T(2, "3", 0),
            T(-2, "21", 0),
            T(2, "1^3", 0),
            T(2, "2", 1),
            T(-2, "1^2", 1),
            T(2, "1", 2),
            T(lambda n: 2 * n - 2, "0", 3),
        ],
        "2 a_0 H_3 - 2 a_0 H_21 + 2 a_0 H_{1^3} + 2 a_1 H_2 - 2 a_1 H_{1^2} + 2 a_2 H_1 + (2n-2) a_3 H_0",
    ),
]

TABLE_2 = [
    _row("2.01", [S(1), S(0)], [T(lambda n: n, "1")], "n H_1"),
    _row("2.02", [S(1), S(1)], [T(2, "1^2")], "2 H_{1^2}"),
    _row("2.03", [S(1), S(2)], [T(1, "21"), T(-2, "1^3")], "H_21 - 2 H_{1^3}"),
    _row(
        "2.04",
        [S(1), S(3)],
        [T(1, "31"), T(-1, "2^2"), T(-1, "21^2"), T(2, "1^4")],
        "H_31 - H_{2^2} - H_{21^2} + 2 H_{1^4}",
    ),
    _row(
        "2.05",
        [S(1), S(4)],
        [T(1, "41"), T(-1, "32"), T(-1, "31^2"), T(1, "2^21"), T(1, "21^3"), T(-2, "1^5")],
        "H_41 - H_32 - H_{31^2} + H_{2^21} + H_{21^3} - 2 H_{1^5}",
    ),
    _row("2.06", [S(1), W(0)], [T(lambda n: n * (n - 1), "1")], "n(n-1) H_1"),
    _row("2.07", [S(1), W(1)], [T(lambda n: 2 * (2 * n - 1), "1^2")], "2(2n-1) H_{1^2}"),
    _row(
        "2.08",
        [S(1), W(2)],
        [T(lambda n: 2 * n, "21"), T(lambda n: -2 * (2 * n - 3), "1^3")],
        "2n H_21 - 2(2n-3) H_{1^3}",
    ),
    _row(
        "2.09",
        [S(1), W(3)],
        [
            T(lambda n: 2 * n, "31"),
            T(lambda n: -2 * (n - 1), "2^2"),
            T(lambda n: -2 * (n - 1), "21^2"),
            T(lambda n: 2 * (2 * n - 5), "1^4"),
        ],
        "2n H_31 - 2(n-1) H_{2^2} - 2(n-1) H_{21^2} + 2(2n-5) H_{1^4}",
    ),
    _row(
        "2.10",
        [S(1), W(4)],
        [
            T(lambda n: 2 * n, "41"),
            T(lambda n: -2 * (n - 1), "32"),
            T(lambda n: -2 * (n - 1), "31^2"),
            T(lambda n: 2 * (n - 2), "2^21"),
            T(lambda n: 2 * (n - 2), "21^3"),
            T(lambda n: -2 * (2 * n - 7), "1^5"),
        ],
        "2n H_41 - 2(n-1) H_32 - 2(n-1) H_{31^2} + 2(n-2) H_{2^21} + 2(n-2) H_{21^3} - 2(2n-7) H_{1^5}",
    ),
    _row("2.11", [S(1), C(-1)], [T(lambda n: -2 * n, "0", 0)], "-2n a_0 H_0"),
    _row(
        "2.12",
        [S(1), C(0)],
        [T(lambda n: 2 * n - 1, "1", 0), T(lambda n: -(2 * n - 1), "0", 1)],
        "(2n-1) a_0 H_1 - (2n-1) a_1 H_0",
    ),
    _row(
        "2.13",
        [S(1), C(1)],
        [T(4, "1^2", 0), T(lambda n: 2 * (n - 1), "1", 1), T(lambda n: -2 * (n - 1), "0", 2)],
        "4 a_0 H_{1^2} + 2(n-1) a_1 H_1 - 2(n-1) a_2 H_0",
    ),
    _row(
        "2.14",
        [S(1), C(2)],
        [
            T(2, "21", 0),
            T(-4, "1^3", 0),
            T(4, "1^2", 1),
            T(lambda n: 2 * n - 3, "1", 2),
            T(lambda n: -(2 * n - 3), "0", 3),
        ],
        "2 a_0 H_21 - 4 a_0 H_{1^3} + 4 a_1 H_{1^2} + (2n-3) a_2 H_1 - (2n-3) a_3 H_0",
    ),
]

TABLE_3 = [
    _row("3.01", [S(2), S(0)], [T(lambda n: n, "2"), T(lambda n: -n, "1^2")], "n H_2 - n H_{1^2}"),
    _row("3.02", [S(2), S(1)], [T(1, "21"), T(-2, "1^3")], "H_21 - 2 H_{1^3}"),
    _row(
        "3.03",
        [S(2), S(2)],
        [T(2, "2^2"), T(-2, "21^2"), T(2, "1^4")],
        "2 H_{2^2} - 2 H_{21^2} + 2 H_{1^4}",
    ),
    _row(
        "3.04",
        [S(2), S(3)],
        [T(1, "32"), T(-1, "31^2"), T(-1, "2^21"), T(2, "21^3"), T(-2, "1^5")],
        "H_32 - H_{31^2} - H_{2^21} + 2 H_{21^3} - 2 H_{1^5}",
    ),
    _row(
        "3.05",
        [S(2), W(0)],
        [T(lambda n: n * (n - 1), "2"), T(lambda n: -(n * n - n + 2), "1^2")],
        "n(n-1) H_2 - (n^2-n+2) H_{1^2}",
    ),
    _row(
        "3.06",
        [S(2), W(1)],
        [T(lambda n: 2 * (n - 1), "21"), T(lambda n: -4 * (n - 1), "1^3")],
        "2(n-1) H_21 - 4(n-1) H_{1^3}",
    ),
    _row(
        "3.07",
        [S(2), W(2)],
        [
            T(lambda n: 2 * (2 * n - 1), "2^2"),
            T(lambda n: -2 * (2 * n - 2), "21^2"),
            T(lambda n: 2 * (2 * n - 4), "1^4"),
        ],
        "2(2n-1) H_{2^2} - 2(2n-2) H_{21^2} + 2(2n-4) H_{1^4}",
    ),
    _row(
        "3.08",
        [S(2), W(3)],
        [
            T(lambda n: 2 * n, "32"),
            T(lambda n: -2 * n, "31^2"),
            T(lambda n: -2 * (n - 2), "2^21"),
            T(lambda n: 4 * (n - 2), "21^3"),
            T(lambda n: -4 * (n - 3), "1^5"),
        ],
        "2n H_32 - 2n H_{31^2} - 2(n-2) H_{2^21} + 4(n-2) H_{21^3} - 4(n-3) H_{1^5}",
    ),
    _row(
        "3.09",
        [S(2), C(-1)],
        [T(-2, "1", 0), T(lambda n: -2 * (n - 1), "0", 1)],
        "-2 a_0 H_1 - 2(n-1) a_1 H_0",
    ),
    _row(
        "3.10",
        [S(2), C(0)],
        [
            T(lambda n: 2 * n - 1, "2", 0),
            T(lambda n: -(2 * n - 1), "1^2", 0),
            T(-2, "1", 1),
            T(lambda n: -(2 * n - 3), "0", 2),
        ],
        "(2n-1) a_0 H_2 - (2n-1) a_0 H_{1^2} - 2 a_1 H_1 - (2n-3) a_2 H_0",
    ),
]

TABLE_4 = [
    _row("4.01", [S(1), S(1), S(0)], [T(lambda n: 2 * (n - 1), "1^2")], "2(n-1) H_{1^2}"),
    _row("4.02", [S(1), S(1), S(1)], [T(6, "1^3")], "6 H_{1^3}"),
    _row("4.03", [S(1), S(1), S(2)], [T(2, "21^2"), T(-6, "1^4")], "2 H_{21^2} - 6 H_{1^4}"),
    _row(
        "4.04",
        [S(1), S(1), S(3)],
        [T(2, "31^2"), T(-2, "2^21"), T(-2, "21^3"), T(6, "1^5")],
        "2 H_{31^2} - 2 H_{2^21} - 2 H_{21^3} + 6 H_{1^5}",
    ),
    _row(
        "4.05",
        [S(1), S(1), W(0)],
        [T(lambda n: 2 * (n - 1) * (n - 2), "1^2")],
        "2(n-1)(n-2) H_{1^2}",
    ),
    _row("4.06", [S(1), S(1), W(1)], [T(lambda n: 12 * (n - 1), "1^3")], "12(n-1) H_{1^3}"),
    _row(
        "4.07",
        [S(1), S(1), W(2)],
        [T(lambda n: 4 * n, "21^2"), T(lambda n: -12 * (n - 2), "1^4")],
        "4n H_{21^2} - 12(n-2) H_{1^4}",
    ),
    _row(
        "4.08",
        [S(1), S(1), W(3)],
        [
            T(lambda n: 4 * n, "31^2"),
            T(lambda n: -4 * (n - 1), "2^21"),
            T(lambda n: -4 * (n - 1), "21^3"),
            T(lambda n: 12 * (n - 3), "1^5"),
        ],
        "4n H_{31^2} - 4(n-1) H_{2^21} - 4(n-1) H_{21^3} + 12(n-3) H_{1^5}",
    ),
    _row(
        "4.09",
        [S(1), S(1), C(-1)],
        [T(lambda n: -4 * (n - 1), "1", 0), T(lambda n: 4 * (n - 1), "0", 1)],
        "-4(n-1) a_0 H_1 + 4(n-1) a_1 H_0",
    ),
    _row(
        "4.10",
        [S(1), S(1), C(0)],
        [
            T(lambda n: 2 * (2 * n - 3), "1^2", 0),
            T(lambda n: -2 * (2 * n - 3), "1", 1),
            T(lambda n: 2 * (2 * n - 3), "0", 2),
        ],
        "2(2n-3) a_0 H_{1^2} - 2(2n-3) a_1 H_1 + 2(2n-3) a_2 H_0",
    ),
]

TABLES = {1: TABLE_1, 2: TABLE_2, 3: TABLE_3, 4: TABLE_4}

ALL_ROWS = {e.row_id: e for table in TABLES.values() for e in table}


def row(row_id: str) -> GammaTableEntry:
    return ALL_ROWS[row_id]
