import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hankel_gamma import closedform as cf
from hankel_gamma.exact import Poly

x = Poly.x()


def test_expansion_examples():
    assert cf.thm1_expansion(1, 2) == Poly([-1, -3])
    assert cf.thm1_expansion(0, 2) == Poly([1]) == cf.thm1_expansion(0, -2)
    assert cf.thm1_expansion(4, -2) == Poly([1, 2, -15, -5, 9])


@pytest.mark.parametrize("n", range(0, 26, 5))
def test_all_expansions_agree_with_determinant(n):
    h = cf.H(n)
    for center in (2, -2):
        for form in ("binomial", "rational"):
            assert cf.thm1_expansion(n, center, form) == h
    assert cf.solution_at0(n) == h


def test_solution_at_zero_examples():
    assert cf.solution_at0(0) == Poly([1])
    assert cf.solution_at0(2) == Poly([-1, -1, 5])
    assert cf.solution_at0(7) == cf.H(7)


def test_expansions_at_zero_give_sign_pattern():
    for n in range(26):
        want = -1 if (n * (n + 1) // 2) % 2 else 1
        assert cf.thm1_at_zero(n, 2) == want == cf.thm1_at_zero(n, -2)


def test_generating_function():
    s = cf.genfun_series(3)
    assert [s[n] for n in range(4)] == [Poly([1]), Poly([-1, -3]), Poly([-1, -1, 5]), Poly([1, 6, 3, -7])]
    assert cf.genfun_check(0) and cf.genfun_check(20)


def test_recursion():
    h = [Poly([1]), Poly([-1, -3]), Poly([-1, -1, 5])]
    c2, c1, c0 = cf.F.recursion_coeffs(0)
    assert (c2 * h[2] + c1 * h[1] + c0 * h[0]).is_zero()
    assert cf.recursion_check(15)


def test_special_values():
    assert cf.special_value(1, 2) == (-7, -7)
    assert cf.special_value(1, -2) == (5, 5)
    assert cf.special_value(4, 1) == (-8, -8)
    for n in range(0, 13):
        for x0 in (2, -2, 0, 1):
            got, want = cf.special_value(n, x0)
            assert got == want


def test_special_value_unknown_point():
    with pytest.raises(ValueError):
        cf.special_closed_form(3, 5)


def test_entries_at_two():
    assert cf.ak_at2(0) == 1 and cf.ak_at2(1) == 6
    assert cf.ak_at2_identity(20)


@pytest.mark.parametrize("n", [1, 2, 6])
def test_pfaff(n):
    assert cf.pfaff_residual(n).is_zero()
    assert cf.pfaff_check(n, [mpq(1, 3), 5])


def test_pfaff_needs_positive_n():
    with pytest.raises(ValueError):
        cf.pfaff_check(0)


def test_first_series_coefficient_ratio():
    b = cf.series_coefficients(1, 2)
    assert b[1] / b[0] == mpq(3, 7)
    assert cf.rel1_holds(1) and cf.rel2_holds(1)


@pytest.mark.parametrize("which", ["BK", "DK", "EK"])
@pytest.mark.parametrize("n", [1, 2, 3, 8])
def test_series_recurrences(n, which):
    assert cf.series_recurrence_check(n, which)


def test_ek_uses_printed_h3():
    assert cf.series_coefficients(3, 0) == [1, 6, 3, -7]


def test_broken_series_is_caught():
    # perturbing one coefficient breaks the recurrence check
    n = 4
    cs = cf.series_coefficients(n, 2)
    cs[2] += 1
    coef = lambda j: cs[j] if 0 <= j < len(cs) else 0  # noqa: E731
    assert any(cf._bk_residual(n, k, coef) != 0 for k in range(2, n + 4))


@given(st.integers(0, 15), st.sampled_from([2, 3, 10]))
@settings(max_examples=30, deadline=None)
def test_sign_outside_interval(n, t):
    h = cf.H(n)
    assert (-1) ** n * h(t) > 0
    assert h(-t) > 0


def test_evaluate_reports_every_form():
    d = cf.evaluate(1, 2)
    assert d["determinant"] == "-7" and d["special_value"] == "-7"
    assert {d["thm1_at2"], d["thm1_atm2"], d["solution_at0"]} == {"-7"}
