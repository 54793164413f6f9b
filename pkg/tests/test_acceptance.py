"""The twelve acceptance criteria, each at its stated tolerance and time budget.

Run alone with `pytest tests/test_acceptance.py`; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import random
import time

import pytest
from gmpy2 import mpq

from hankel_gamma import closedform as cf
from hankel_gamma import conjectures as cj
from hankel_gamma import identities as ident
from hankel_gamma import zeros as z
from hankel_gamma.cli import run_tables
from hankel_gamma.exact import Poly
from hankel_gamma.gamma import gamma_definitional
from hankel_gamma.gamma_tables import ALL_ROWS
from hankel_gamma.hankel import FAMILY_22, PolyMatrix, det_bareiss, det_interpolation, hankel_matrix, shifted_hankel_det
from oracles import gamma_by_t_interpolation


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def report(number, ok, detail=""):
    print(f"criterion {number}: {'pass' if ok else 'fail'} {detail}".rstrip())
    return ok


@pytest.mark.criterion(1, "printed H_0..H_3")
def test_c01_printed_list():
    with Budget(1):
        printed = [[1], [-1, -3], [-1, -1, 5], [1, 6, 3, -7]]
        got = [shifted_hankel_det(FAMILY_22, n) for n in range(4)]
        ok = got == [Poly(cs) for cs in printed] and str(got[3]) == "1 + 6x + 3x^2 - 7x^3"
    assert report(1, ok)


@pytest.mark.criterion(2, "expansions at x = 2 and -2 in both forms and the x = 0 form equal the determinant, n <= 25")
def test_c02_expansions():
    with Budget(30):
        dets = cf.determinant_list(25)
        bad = []
        for n in range(26):
            forms = {
                "binomial@2": cf.thm1_expansion(n, 2, "binomial"),
                "binomial@-2": cf.thm1_expansion(n, -2, "binomial"),
                "rational@2": cf.thm1_expansion(n, 2, "rational"),
                "rational@-2": cf.thm1_expansion(n, -2, "rational"),
                "at0": cf.solution_at0(n),
            }
            bad += [(n, k) for k, p in forms.items() if p != dets[n]]
    assert report(2, not bad, str(bad[:5]))


@pytest.mark.criterion(3, "special values at x = 2, -2, 0, 1 for n <= 30")
def test_c03_special_values():
    with Budget(30):
        bad = [
            (n, x0)
            for n in range(31)
            for x0 in (2, -2, 0, 1)
            if (lambda pair: pair[0] != pair[1])(cf.special_value(n, x0))
        ]
    assert report(3, not bad, str(bad[:5]))


@pytest.mark.criterion(4, "gamma tables 1-4: family n = 5,6,7 and random symbols n = 8 x 20")
def test_c04_tables():
    with Budget(300):
        family = run_tables(list(ALL_ROWS), [5, 6, 7], None)
        randomized = run_tables(list(ALL_ROWS), [8], 20)
        bad = [(r.row_id, r.n, r.mode) for r in family + randomized if not r.passed]
        complete = len(family) == 3 * len(ALL_ROWS) and all(r.trials == 20 for r in randomized)
    assert report(4, not bad and complete, str(bad[:5]))


@pytest.mark.criterion(5, "FI, SI (n <= 20) and TI (n <= 15) residuals vanish")
def test_c05_entry_identities():
    with Budget(120):
        ok = all(r.passed for r in ident.verify_first_identity(20))
        ok &= all(r.passed for r in ident.verify_second_identity(20))
        ok &= all(ident.verify_third_identity(n).passed for n in range(16))
    assert report(5, ok)


@pytest.mark.criterion(6, "five equations, det(M), expansions, derivatives, GCD and ODE for 2 <= n <= 12")
def test_c06_linear_system_and_ode():
    with Budget(300):
        bad = []
        for n in range(2, 13):
            checks = ident.build_five_equations(n)
            checks.append(ident.det_M_residual(n))
            checks += ident.expansion_residuals(n)
            checks += list(ident.derivative_system(n).residuals)
            checks += ident.ode_derivation_residuals(n)
            checks.append(ident.verify_ode(n))
            bad += [(n, r.name) for r in checks if not r.passed]
    assert report(6, not bad, str(bad[:5]))


@pytest.mark.criterion(7, "generating function through t^25 and recursion for n <= 20")
def test_c07_genfun_recursion():
    with Budget(60):
        ok = cf.genfun_check(25) and cf.recursion_check(20)
    assert report(7, ok)


@pytest.mark.criterion(8, "series recurrences b_k, d_k, e_k, first-coefficient relations, closed b_k, n <= 12")
def test_c08_series():
    with Budget(60):
        ok = all(cf.series_recurrence_check(n, w) for n in range(1, 13) for w in ("BK", "DK", "EK"))
        ok &= all(cf.rel1_holds(n) and cf.rel2_holds(n) for n in range(1, 13))
    assert report(8, ok)


@pytest.mark.criterion(9, "Pfaffian-type identity for 1 <= n <= 8")
def test_c09_pfaff():
    with Budget(30):
        ok = all(cf.pfaff_residual(n).is_zero() for n in range(1, 9))
    assert report(9, ok)


@pytest.mark.criterion(10, "zero table rows 1-7, roots in (-2,2), interlacing n <= 10, widths <= 1e-6")
def test_c10_zeros():
    with Budget(120):
        table_ok = z.zero_table_matches() == []
        inside = True
        narrow = True
        for n in range(1, 11):
            ivs = z.isolate_roots(n, mpq(1, 10**6)).isolating_intervals
            inside &= len(ivs) == n and all(-2 < iv.lo and iv.hi < 2 for iv in ivs)
            narrow &= all(iv.width <= mpq(1, 10**6) for iv in ivs)
        interlace = z.verify_interlacing(10)
    assert report(10, table_ok and inside and narrow and interlace)


@pytest.mark.criterion(11, "conjecture scanner: proven r = 3 case to n = 40, pattern reports m <= 3, scan n <= 60, r <= 9")
def test_c11_conjectures(tmp_path):
    with Budget(300):
        r3 = cj.verify_pattern(cj.PatternId.R3_TRIPLE, 13)
        r3_ok = r3.passed and all(row["n"] <= 41 for row in r3.rows) and max(row["n"] for row in r3.rows) >= 40
        reports = {pid: cj.verify_pattern(pid, 3) for pid in cj.PatternId}
        structured = all(
            rep.rows and all({"case", "r", "m", "n", "expected", "actual", "status"} <= set(row) for row in rep.rows)
            for rep in reports.values()
        )
        count = cj.scan(60, 9, tmp_path / "scan.jsonl", workers=1)
    mism = {pid.value: len(rep.mismatches) for pid, rep in reports.items() if rep.mismatches}
    assert report(11, r3_ok and structured and count == 610, f"conjecture mismatches reported: {mism}")


@pytest.mark.criterion(12, "engine agreement (200 random + Hankel n <= 10) and gamma vs t-interpolation (50)")
def test_c12_oracle_redundancy():
    with Budget(120):
        rng = random.Random(20240612)
        ok = True
        for _ in range(200):
            size = rng.randint(1, 6)
            m = PolyMatrix(
                [[Poly([rng.randint(-9, 9) for _ in range(rng.randint(0, 4))]) for _ in range(size)] for _ in range(size)]
            )
            ok &= det_bareiss(m) == det_interpolation(m)
        for n in range(11):
            m = hankel_matrix(FAMILY_22, n)
            ok &= det_bareiss(m) == det_interpolation(m)
        from fractions import Fraction

        for _ in range(50):
            size = rng.randint(1, 4)
            k = rng.randint(0, min(2, size))
            rows = lambda: [[Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(size)] for _ in range(size)]  # noqa: E731
            A, Xs = rows(), [rows() for _ in range(k)]
            to_pm = lambda r: PolyMatrix([[Poly([v]) for v in row] for row in r])  # noqa: E731
            g = gamma_definitional(to_pm(A), [to_pm(X) for X in Xs])(0)
            ok &= Fraction(int(g.numerator), int(g.denominator)) == gamma_by_t_interpolation(A, Xs)
    assert report(12, ok)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
