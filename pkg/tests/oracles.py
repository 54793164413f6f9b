"""Independent reference implementations used only by the tests.

These use fractions.Fraction and plain lists, sharing no code with the package.
"""

from fractions import Fraction
from itertools import permutations


def padd(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return trim(out)


def pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det_poly(rows):
    """det of a matrix of coefficient lists by the full permutation expansion."""
    n = len(rows)
    total = []
    for perm in permutations(range(n)):
        term = [Fraction(_perm_sign(perm))]
        for i in range(n):
            term = pmul(term, rows[i][perm[i]])
        total = padd(total, term)
    return total


def cofactor_det(rows):
    """det of a rational matrix by Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


def gauss_det(rows):
    """det of a rational matrix by Gaussian elimination over Fraction."""
    a = [[Fraction(v) for v in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


def lagrange_coeffs(xs, ys):
    """Coefficient list of the interpolating polynomial through (xs, ys)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = pmul(basis, [Fraction(-xs[j]), Fraction(1)]) or [Fraction(0)]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def gamma_by_t_interpolation(A, Xs):
    """Coefficient of t_1 ... t_m in det(A + sum t_i X_i), for rational matrices.

    Kronecker substitution t_i = s^(D^(i-1)) with D = size + 1 maps each
    monomial in t to a distinct power of s; the resulting univariate polynomial
    is interpolated in s and the coefficient of s^(1 + D + ... + D^(m-1)) read off.
    """
    size = len(A)
    m = len(Xs)
    D = size + 1
    powers = [D**i for i in range(m)]
    deg = size * D ** max(m - 1, 0)
    xs = list(range(deg + 1))
    ys = []
    for s in xs:
        ts = [Fraction(s) ** p for p in powers]
        mat = [
            [Fraction(A[i][j]) + sum(t * X[i][j] for t, X in zip(ts, Xs)) for j in range(size)]
            for i in range(size)
        ]
        ys.append(gauss_det(mat))
    coeffs = lagrange_coeffs(xs, ys)
    target = sum(powers)
    return coeffs[target] if target < len(coeffs) else Fraction(0)


def binom(a, b):
    if b < 0 or a < 0 or b > a:
        return 0
    num = 1
    for i in range(b):
        num = num * (a - i) // (i + 1)
    return num


def entry(k, beta=2, alpha=2):
    return trim([binom(beta * k + alpha - m, k - m) for m in range(k + 1)])
