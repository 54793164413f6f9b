import pytest

from hankel_gamma import formulas as F
from hankel_gamma import identities as ident
from hankel_gamma.errors import IndexOutOfRange, NTooSmall
from hankel_gamma.exact import Poly

x = Poly.x()


@pytest.mark.parametrize("n", [0, 1, 2, 10])
def test_first_identity(n):
    assert ident.first_identity_residual(n).passed


@pytest.mark.parametrize("n", [0, 1, 7, 15])
def test_second_identity(n):
    assert ident.second_identity_residual(n).passed


def test_weights():
    assert ident.ti_weight(0, 0) == Poly([10, 15, 10])
    with pytest.raises(IndexOutOfRange):
        ident.ti_weight(2, 5)
    with pytest.raises(IndexOutOfRange):
        ident.ti_weight(2, -1)


@pytest.mark.parametrize("n", [0, 3, 12])
def test_third_identity(n):
    assert ident.verify_third_identity(n).passed


def test_weight_relation_sign_alternates():
    assert ident.weight_relation_residual(1, 0).is_zero()
    assert ident.weight_relation_residual(3, 1).is_zero()
    # the relation fails with a uniform sign
    assert not ident.weight_relation_residual(3, 1, sign=1).is_zero()
    assert not ident.weight_relation_residual(3, 0, sign=-1).is_zero()


def test_kernel_membership():
    assert ident.kernel_membership_check(5)


@pytest.mark.parametrize("n", [2, 3, 8])
def test_five_equations(n):
    assert all(r.passed for r in ident.build_five_equations(n))


def test_five_equations_floor():
    with pytest.raises(NTooSmall):
        ident.build_five_equations(1)


def test_det_M_at_two():
    M, b = ident.build_M(2)
    want = 12 * (1 + 2 * x) * (1 + 4 * x) * (2 + 5 * x) * (2 + 7 * x) ** 2
    assert F.det_M_product(2) == want
    assert ident.det_M_residual(2).passed and ident.det_M_residual(3).passed
    assert len(b) == 5 and M.size == 5


def test_transcribed_M_matches_equations():
    for n in range(2, 9):
        rows = [r for r, _, _ in ident.equation_forms(n)]
        assert rows == F.matrix_M(n)


def test_expansion_h2_at_two():
    n = 2
    h0, h1, h2 = ident.H(n, "0"), ident.H(n, "1"), ident.H(n, "2")
    r = (
        (2 + 3 * x + 2 * n * x) * h2
        + (n + 1) * (2 * n + 5) * (2 * x**2 + 2 * n * x + 3 * x + 2) * h0
        - (4 * x * n**2 + 2 * x**2 * n + 16 * x * n + 4 * n + 3 * x**2 + 15 * x + 10) * h1
    )
    assert r.is_zero()


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_expansions_and_cramer(n):
    assert all(r.passed for r in ident.expansion_residuals(n))
    solved = ident.solve_expansions(n)
    assert solved["1^2"] == ident.H(n, "1^2")


@pytest.mark.parametrize("n", [2, 4])
def test_derivative_relations(n):
    cs = ident.derivative_system(n)
    assert all(r.passed for r in cs.residuals)


@pytest.mark.parametrize("n", [1, 3, 10])
def test_ode(n):
    assert ident.verify_ode(n).passed


@pytest.mark.parametrize("n", range(2, 9))
def test_ode_rederived_and_gcd(n):
    assert all(r.passed for r in ident.ode_derivation_residuals(n))


def test_residual_json_shape():
    d = ident.first_identity_residual(3).to_json()
    assert d["status"] == "pass" and d["residual"] == {"coeffs": []}
