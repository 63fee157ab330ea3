"""Truncated multivariate series: inversion, rational powers, square roots."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from indephorn.graph import make_complete, make_cycle, make_path
from indephorn.poly import MultiPoly, delta_poly, independence_polynomial
from indephorn.series import (
    TruncatedSeries,
    box_cells,
    from_poly,
    invert,
    mul,
    pow_neg_s,
    sqrt_inv,
)


def one_plus_x1(nvars=1):
    return MultiPoly.one(nvars) + MultiPoly.var(nvars, 1)


def test_from_poly_restriction():
    ts = from_poly(one_plus_x1(), 2)
    assert ts.coeffs == {(0,): 1, (1,): 1}


def test_from_poly_c4_box1():
    ts = from_poly(independence_polynomial(make_cycle(4)), 1)
    assert len(ts.coeffs) == 7


def test_from_poly_zero():
    assert from_poly(MultiPoly.zero(2), 3).coeffs == {}


def test_mul_geometric_inverse():
    geo = TruncatedSeries(1, 4, {(k,): Fraction(-1) ** k for k in range(5)})
    prod = mul(from_poly(one_plus_x1(), 4), geo)
    assert prod.coeffs == {(0,): 1}


def test_mul_identity():
    a = invert(independence_polynomial(make_path(3)), 2)
    one = from_poly(MultiPoly.one(3), 2)
    assert mul(a, one).coeffs == a.coeffs


def test_mul_shape_mismatch():
    with pytest.raises(ValueError):
        mul(from_poly(MultiPoly.one(1), 2), from_poly(MultiPoly.one(2), 2))


def test_invert_k2_against_inverse():
    p = independence_polynomial(make_complete(2))
    assert mul(from_poly(p, 2), invert(p, 2)).coeffs == {(0, 0): 1}


def test_invert_k2_multinomials():
    inv = invert(independence_polynomial(make_complete(2)), 3)
    for m1 in range(4):
        for m2 in range(4):
            expected = Fraction(-1) ** (m1 + m2) * math.comb(m1 + m2, m1)
            assert inv.coefficient((m1, m2)) == expected


def test_invert_c4_coefficient_14():
    inv = invert(independence_polynomial(make_cycle(4)), 1)
    assert inv.coefficient((1, 1, 1, 1)) == 14
    assert inv.unsigned().coefficient((1, 1, 1, 1)) == 14


def test_invert_geometric():
    inv = invert(one_plus_x1(), 4)
    assert inv.coeffs == {(k,): Fraction(-1) ** k for k in range(5)}


def test_invert_zero_constant_term():
    with pytest.raises(ValueError):
        invert(MultiPoly.var(1, 1), 2)


def test_pow_s1_is_invert():
    for g in (make_path(3), make_cycle(4)):
        p = independence_polynomial(g)
        assert pow_neg_s(p, 1, 2).coeffs == invert(p, 2).coeffs


def test_pow_half_binomials():
    got = pow_neg_s(one_plus_x1(), Fraction(1, 2), 2)
    assert got.coeffs == {(0,): 1, (1,): Fraction(-1, 2), (2,): Fraction(3, 8)}


def test_pow_s0_is_one():
    p = independence_polynomial(make_cycle(4))
    assert pow_neg_s(p, 0, 2).coeffs == {(0, 0, 0, 0): 1}


def test_pow_nonunit_constant_rejected():
    with pytest.raises(ValueError):
        pow_neg_s(MultiPoly.constant(1, Fraction(2)), 1, 2)


def test_sqrt_inv_of_one():
    assert sqrt_inv(MultiPoly.one(2), 3).coeffs == {(0, 0): 1}


def test_sqrt_inv_of_square():
    p = one_plus_x1() * one_plus_x1()
    assert sqrt_inv(p, 3).coeffs == {(k,): Fraction(-1) ** k for k in range(4)}


def test_sqrt_inv_delta_c4():
    got = sqrt_inv(delta_poly(4), 1)
    assert got.unsigned().coefficient((1, 1, 1, 1)) == 16


def test_diagonal_of_c4_inverse():
    inv = invert(independence_polynomial(make_cycle(4)), 3)
    diag = [abs(c) for c in inv.diagonal()]
    # de Bruijn numbers S(4,k): alternating sums of fourth powers of binomials
    expected = [
        sum(
            (-1 if j % 2 else 1) * math.comb(2 * k, k + j) ** 4
            for j in range(-k, k + 1)
        )
        for k in range(4)
    ]
    assert diag == expected == [1, 14, 786, 61340]


def test_diagonal_of_constant():
    assert from_poly(MultiPoly.one(2), 3).diagonal() == [1, 0, 0, 0]


def test_constant_coefficient_of_invert():
    p = MultiPoly.constant(1, Fraction(4)) + MultiPoly.var(1, 1)
    q = p * MultiPoly.constant(1, Fraction(1, 4))  # normalize to constant 1
    assert invert(q, 2).coefficient((0,)) == 1


def test_coefficient_out_of_box():
    with pytest.raises(ValueError):
        from_poly(MultiPoly.one(1), 2).coefficient((3,))


def unit_polys(nvars, max_order=3):
    return st.dictionaries(
        st.tuples(*[st.integers(0, 2)] * nvars),
        st.integers(-5, 5).map(Fraction),
        max_size=5,
    ).map(
        lambda d: MultiPoly(
            nvars, {**{m: c for m, c in d.items() if c}, (0,) * nvars: Fraction(1)}
        )
    )


@settings(max_examples=40)
@given(unit_polys(2))
def test_mul_invert_is_one(p):
    n = 4
    assert mul(from_poly(p, n), invert(p, n)).coeffs == {(0, 0): 1}


@settings(max_examples=25)
@given(unit_polys(2))
def test_pow_s2_is_squared_inverse(p):
    inv = invert(p, 3)
    assert pow_neg_s(p, 2, 3).coeffs == mul(inv, inv).coeffs


@settings(max_examples=25)
@given(unit_polys(2))
def test_pow_additivity(p):
    s1, s2 = Fraction(1, 2), Fraction(3, 2)
    lhs = pow_neg_s(p, s1 + s2, 3)
    rhs = mul(pow_neg_s(p, s1, 3), pow_neg_s(p, s2, 3))
    assert lhs.coeffs == rhs.coeffs


def pow_neg_s_binomial_oracle(p, s, order):
    """Reference route: p = 1 + u, sum binom(-s, k) u^k over the box."""
    nvars = p.nvars
    u = from_poly(p - MultiPoly.one(nvars), order)
    acc = from_poly(MultiPoly.one(nvars), order)
    out = TruncatedSeries(nvars, order, {(0,) * nvars: Fraction(1)})
    coeff = Fraction(1)
    for k in range(1, nvars * order + 1):
        coeff = coeff * (-s - (k - 1)) / k
        acc = mul(acc, u)
        if not acc.coeffs:
            break
        out = out + TruncatedSeries(
            nvars, order, {m: coeff * c for m, c in acc.coeffs.items()}
        )
    return out


@settings(max_examples=15)
@given(unit_polys(2))
def test_pow_matches_binomial_oracle(p):
    s = Fraction(1, 2)
    assert pow_neg_s(p, s, 3).coeffs == pow_neg_s_binomial_oracle(p, s, 3).coeffs


def all_labeled_graphs(n):
    import itertools

    from indephorn.graph import Graph

    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def test_inverse_coefficients_positive_integers():
    for g in all_labeled_graphs(4):
        inv = invert(independence_polynomial(g), 2).unsigned()
        for m in box_cells(4, 2):
            c = inv.coefficient(m)
            assert c.denominator == 1 and c >= 1


def test_json_roundtrip():
    inv = invert(independence_polynomial(make_cycle(4)), 2)
    again = TruncatedSeries.from_json(inv.to_json())
    assert again.coeffs == inv.coeffs and again.order == inv.order
