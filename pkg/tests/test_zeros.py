import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hankel_gamma import zeros as z
from hankel_gamma.errors import EndpointIsRoot
from hankel_gamma.exact import Poly


def test_sturm_chain_examples():
    assert z.sturm_chain(Poly([-1, 0, 1])) == [Poly([-1, 0, 1]), Poly([0, 2]), Poly([1])]
    assert z.sturm_chain(Poly([3])) == [Poly([3])]
    assert z.count_roots(z.H0(3), z.Interval(-2, 2)) == 3


def test_count_roots_examples():
    assert z.count_roots(Poly([-1, 0, 1]), z.Interval(-2, 2)) == 2
    assert z.count_roots(Poly([1, 0, 1]), z.Interval(-10, 10)) == 0
    assert z.count_roots(z.H0(5), z.Interval(-2, 2)) == 5
    with pytest.raises(EndpointIsRoot):
        z.count_roots(Poly([-1, 0, 1]), z.Interval(-1, 3))


def test_interval_validation():
    with pytest.raises(ValueError):
        z.Interval(1, 1)


def test_first_root_is_minus_one_third():
    rep = z.isolate_roots(1)
    (iv,) = rep.isolating_intervals
    assert iv.lo < mpq(-1, 3) < iv.hi and iv.width <= mpq(1, 10**6)
    assert rep.decimals(3) == ["-0.333"]


def test_second_row():
    assert z.isolate_roots(2).decimals(3) == ["-0.358", "0.558"]


def test_table_reproduced():
    assert z.zero_table_matches() == []


def test_rounding_and_truncation():
    assert z.round_rational(mpq(-601543, 10**6), 3) == "-0.602"
    assert z.truncate_rational(mpq(-601543, 10**6), 3) == "-0.601"
    assert z.truncate_rational(mpq(-1, 10**4), 3) == "0.000"
    assert z.round_rational(mpq(7, 2), 0) == "4"


@pytest.mark.parametrize("n", range(1, 13))
def test_all_roots_real_simple_and_inside(n):
    p = z.H0(n)
    assert z.count_roots(p, z.Interval(-2, 2)) == n
    assert z.count_roots(p, z.Interval(-(10**6), 10**6)) == n
    assert z.count_real_roots(p) == n
    assert z.is_squarefree(p)


def test_refinement_keeps_counts():
    p = z.H0(6)
    coarse = z.isolate_poly_roots(p, width=mpq(1, 10**3))
    fine = z.isolate_poly_roots(p, width=mpq(1, 10**4))
    assert len(coarse) == len(fine) == 6
    for a, b in zip(coarse, fine):
        assert z.count_roots(p, a) == 1 and a.lo <= b.mid <= a.hi


def test_interlacing():
    assert z.verify_interlacing(3)
    assert z.verify_interlacing(10)


def test_interlacing_negative_control():
    outer = Poly([-1, 0, 1]) * Poly([0, 1])
    assert not z.interlaces(Poly([-1, 1]), outer)
    assert not z.interlaces(Poly([0, 1]) * Poly([mpq(-1, 2), 1]), outer)


@pytest.mark.parametrize("n", range(0, 9))
def test_recursion_sign_mechanism(n):
    assert z.recursion_sign_check(n)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5, unique=True))
@settings(max_examples=40, deadline=None)
def test_isolation_finds_planted_roots(roots):
    p = Poly([1])
    for r in roots:
        p = p * Poly([mpq(-r, 5), 1])
    ivs = z.isolate_poly_roots(p, -2, 2, mpq(1, 100))
    assert len(ivs) == len(roots)
    for iv, r in zip(ivs, sorted(roots)):
        assert iv.lo < mpq(r, 5) < iv.hi
