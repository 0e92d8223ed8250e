from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biorthopoly.errors import IndexOutOfRange, InsufficientNodes
from biorthopoly.polynomials import (
    Grid,
    Polynomial,
    nodal_derivative_at,
    nodal_polynomial,
)

F = Fraction

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=12)
coeff_lists = st.lists(coeff, max_size=7)


def poly(*coeffs):
    return Polynomial([F(c) for c in coeffs])


def test_eval_quadratic():
    assert poly(1, 0, 1)(F(2)) == 5


def test_eval_zero_polynomial():
    assert Polynomial.zero()(F(17)) == 0


def test_eval_linear():
    assert poly(3, 1)(F(1)) == 4


def test_eval_accepts_complex():
    p = poly(1, 0, 1)
    assert p(1j) == 0j


def test_trailing_zeros_stripped():
    assert Polynomial([F(1), F(2), F(0), F(0)]).coeffs == (1, 2)
    assert Polynomial([F(0), F(0)]).is_zero()


def test_degree_conventions():
    assert Polynomial.zero().degree < 0
    assert Polynomial.constant(F(4)).degree == 0
    assert poly(0, 0, 0, 2).degree == 3


def test_coefficient_out_of_range_is_zero():
    assert poly(1, 2).coefficient(5) == 0


def test_mul_difference_of_squares():
    assert poly(1, 1) * poly(-1, 1) == poly(-1, 0, 1)


def test_sub_to_zero():
    p = poly(1, 0, 1)
    assert (p - p).is_zero()


def test_scale():
    assert poly(1, 1).scale(F(3)) == poly(3, 3)
    assert 3 * poly(1, 1) == poly(3, 3)


def test_divide_keeps_leading_coefficient_exact():
    # 49.0 * (1/49.0) != 1.0, so monic normalization must divide
    p = Polynomial([2.0, 49.0])
    assert p.divide(49.0).leading_coefficient() == 1.0


@given(coeff_lists, coeff_lists)
def test_mul_degree_adds(a, b):
    pa, pb = Polynomial(a), Polynomial(b)
    if pa.is_zero() or pb.is_zero():
        assert (pa * pb).is_zero()
    else:
        assert (pa * pb).degree == pa.degree + pb.degree


@given(coeff_lists, coeff_lists, coeff)
def test_eval_is_ring_homomorphism(a, b, x):
    pa, pb = Polynomial(a), Polynomial(b)
    assert (pa + pb)(x) == pa(x) + pb(x)
    assert (pa * pb)(x) == pa(x) * pb(x)


def test_derivative():
    assert poly(5, 3, 0, 2).derivative() == poly(3, 0, 6)
    assert Polynomial.constant(F(4)).derivative().is_zero()


def test_deflate_exact_root():
    p = poly(-1, 0, 1)  # (z-1)(z+1)
    quotient, remainder = p.deflate(F(1))
    assert quotient == poly(1, 1)
    assert remainder == 0


@given(coeff_lists, coeff)
def test_deflate_remainder_is_value(coeffs, root):
    p = Polynomial(coeffs)
    quotient, remainder = p.deflate(root)
    assert remainder == p(root)
    assert quotient * Polynomial((-root, 1)) + Polynomial.constant(remainder) == p


def test_grid_rejects_duplicates():
    with pytest.raises(ValueError):
        Grid([F(0), F(1), F(0)])


def test_grid_prefix():
    g = Grid([F(0), F(1), F(2)])
    assert g.prefix(2).nodes == (0, 1)


def test_nodal_polynomial_cases():
    g = Grid([F(0), F(1), F(2)])
    assert nodal_polynomial(g, 0) == Polynomial.constant(1)
    assert nodal_polynomial(g, 2) == poly(0, -1, 1)
    assert nodal_polynomial(g, 3) == poly(0, 2, -3, 1)


def test_nodal_polynomial_needs_enough_nodes():
    with pytest.raises(InsufficientNodes):
        nodal_polynomial(Grid([F(0), F(1)]), 3)


def test_nodal_polynomial_root_pattern():
    g = Grid([F(0), F(1), F(2), F(5)])
    omega = nodal_polynomial(g, 3)
    for i in range(3):
        assert omega(g[i]) == 0
    assert omega(g[3]) != 0


@pytest.mark.parametrize("nodes, k_plus_1, s, expected", [
    ((0, 1, 2), 3, 0, 2),
    ((0, 1, 2), 3, 1, -1),
    ((0, 1), 2, 0, -1),
])
def test_nodal_derivative_values(nodes, k_plus_1, s, expected):
    g = Grid([F(a) for a in nodes])
    assert nodal_derivative_at(g, k_plus_1, s) == expected


def test_nodal_derivative_index_checks():
    g = Grid([F(0), F(1)])
    with pytest.raises(IndexOutOfRange):
        nodal_derivative_at(g, 3, 0)
    with pytest.raises(IndexOutOfRange):
        nodal_derivative_at(g, 2, 2)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7, unique=True))
def test_nodal_derivative_matches_formal_derivative(nodes):
    """The product over i != s must agree with differentiating omega_{k+1}."""
    g = Grid([F(a) for a in nodes])
    for k_plus_1 in range(1, len(nodes) + 1):
        formal = nodal_polynomial(g, k_plus_1).derivative()
        for s in range(k_plus_1):
            assert nodal_derivative_at(g, k_plus_1, s) == formal(g[s])
