from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hankel_gamma.errors import DuplicateAbscissa, NonUnitConstantTerm, NotDivisible
from hankel_gamma.exact import (
    ONE,
    ZERO,
    Poly,
    Series,
    det_integer,
    det_rational,
    format_rational,
    interpolate_values,
    parse_rational,
    poly_arith,
    poly_derivative,
    poly_exact_div,
    poly_gcd,
    poly_interpolate,
    series_quotient,
)
from oracles import cofactor_det

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(rationals, max_size=9).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*cs):
    return Poly(cs)


def test_product_and_sum_examples():
    assert poly_arith(P(1, 1), P(1, -1), "mul") == P(1, 0, -1)
    s = poly_arith(P(4, 1), P(-4, -1), "add")
    assert s.is_zero() and s.coeffs == ()
    assert P(4, 1) * P(4, 1) == P(16, 8, 1)


def test_derivative_examples():
    assert poly_derivative(P(1, 6, 3, -7)) == P(6, 6, -21)
    assert poly_derivative(P(5)) == ZERO
    assert poly_derivative(P(15, 5, 1)) == P(5, 2)


def test_exact_division_examples():
    assert poly_exact_div(P(1, 0, -1), P(1, 1)) == P(1, -1)
    p = P(3, 0, 2)
    assert poly_exact_div(p, ONE) == p
    assert poly_exact_div(P(4, 4, 1), P(2, 1)) == P(2, 1)
    with pytest.raises(NotDivisible):
        poly_exact_div(P(1, 0, 1), P(1, 1))


def test_interpolation_examples():
    assert poly_interpolate([(0, 1), (1, 2)]) == P(1, 1)
    assert poly_interpolate([(0, mpq(3, 7))]) == P(mpq(3, 7))
    h2 = P(-1, -1, 5)
    assert poly_interpolate([(k, h2(k)) for k in range(4)]) == h2
    with pytest.raises(DuplicateAbscissa):
        poly_interpolate([(1, 2), (1, 3)])


def test_series_quotient_examples():
    geom = series_quotient(Series([1], 3), Series([1, -1], 3), 3)
    assert geom == Series([1, 1, 1, 1], 3)
    num = Series([P(3), P(0, 1), P(2, 0, 1)], 4)
    assert series_quotient(num, num, 4) == Series([1], 4)
    x = Poly.x()
    gfnum = Series([ONE, -1 - x, 1 - 3 * x, P(-1)], 1)
    base = Series([ONE, x, ONE], 1)
    assert series_quotient(gfnum, base * base, 1)[1] == P(-1, -3)
    with pytest.raises(NonUnitConstantTerm):
        series_quotient(Series([1], 2), Series([P(0, 1), 1], 2), 2)


def test_rational_literals():
    assert parse_rational("2/1") == 2
    assert parse_rational("-3/6") == mpq(-1, 2)
    assert format_rational(mpq(-1, 2)) == "-1/2"
    for bad in ("0.5", "1e3", "a/b", "1/2/3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_json_round_trip():
    p = P(mpq(1, 3), 0, -7)
    assert Poly.from_json(p.to_json()) == p
    assert p.to_json() == {"coeffs": ["1/3", "0/1", "-7/1"]}


def test_str_and_degree():
    assert str(P(1, 6, 3, -7)) == "1 + 6x + 3x^2 - 7x^3"
    assert P(0, 0, 1).degree == 2
    assert ZERO.degree < 0


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - q) + q == p


@given(polys, polys, rationals)
def test_derivative_linear_and_leibniz(p, q, c):
    assert (p + q * c).derivative() == p.derivative() + q.derivative() * c
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, nonzero_polys)
def test_exact_div_inverts_multiplication(p, q):
    assert poly_exact_div(p * q, q) == p
    quo, rem = (p * q + ONE).divmod(q) if q.degree > 0 else (None, None)
    if quo is not None:
        assert quo * q + rem == p * q + ONE
        assert rem.degree < q.degree


@given(polys, st.lists(st.integers(-30, 30), min_size=12, max_size=12, unique=True))
def test_interpolation_round_trip(p, xs):
    pts = [(x, p(x)) for x in xs[: max(p.degree, 0) + 1]]
    assert poly_interpolate(pts) == p


@given(polys)
def test_interpolate_values_default_abscissae(p):
    d = max(p.degree, 0)
    assert interpolate_values([p(k) for k in range(d + 1)]) == p


@given(polys, polys, polys)
def test_compose_and_shift(p, q, c):
    x = Poly.x()
    assert p.compose(x) == p
    assert p.shift(2) == p.compose(x + 2)
    assert p.shift(2).shift(-2) == p
    assert (p * q).compose(c) == p.compose(c) * q.compose(c)


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()
    assert g.leading == 1


@given(st.lists(polys, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=5), st.integers(0, 6))
def test_series_quotient_times_den(num_cs, den_tail, order):
    den = Series([ONE] + [Poly([c]) for c in den_tail], order)
    num = Series(num_cs, order)
    assert series_quotient(num, den, order) * den == num


small = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=60)
def test_det_rational_matches_cofactor(rows):
    got = det_rational(rows)
    want = cofactor_det(rows)
    assert Fraction(int(got.numerator), int(got.denominator)) == want


def test_det_integer_with_pivoting():
    from gmpy2 import mpz

    m = [[mpz(0), mpz(2)], [mpz(3), mpz(5)]]
    assert det_integer(m) == -6
    assert det_rational([[0, 0], [1, 2]]) == 0
    assert det_rational([]) == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        Poly([0.5])
