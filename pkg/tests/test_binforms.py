import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2curves.binforms import (
    BinForm,
    bf_derivatives,
    bf_divexact,
    bf_gcd,
    bf_order_at,
    bf_resultant,
)
from g2curves.exactnum import I, InputError, ONE, ZERO, gr

U = BinForm.of(1, 0)
V = BinForm.of(0, 1)


def test_gcd_monomials():
    f = U * U * V
    g = U * V * V
    assert bf_gcd(f, g) == U * V


def test_gcd_shared_linear_factor():
    f = BinForm.of(1, 0, -1)  # u^2 - v^2
    g = BinForm.of(1, 1)      # u + v
    assert bf_gcd(f, g) == g


def test_gcd_over_gaussian_field():
    f = BinForm.of(1, 0, 1)        # u^2 + v^2 = (u - iv)(u + iv)
    g = BinForm.of(1, gr(0, -1))   # u - iv
    assert bf_gcd(f, g) == g
    assert bf_divexact(f, g) == BinForm.of(1, gr(0, 1))


def test_gcd_both_zero_rejected():
    with pytest.raises(InputError):
        bf_gcd(BinForm.zero(2), BinForm.zero(3))


def test_resultant_values():
    assert bf_resultant(U, V) == ONE
    assert bf_resultant(U * V, U * U) == ZERO
    assert bf_resultant(BinForm.of(1, -1), BinForm.of(1, 1)) == gr(2)
    with pytest.raises(InputError):
        bf_resultant(BinForm.of(3), U)


def test_derivatives():
    f = BinForm.monomial(6, 0)  # u^6
    fu, fv = bf_derivatives(f)
    assert fu == BinForm.monomial(5, 0, 6)
    assert fv.is_zero
    g = BinForm.monomial(6, 3)  # u^3 v^3
    gu, gv = bf_derivatives(g)
    assert gu == BinForm.monomial(5, 3, 3)
    assert gv == BinForm.monomial(5, 2, 3)


def euler_defect(f):
    fu, fv = bf_derivatives(f)
    return U * fu + V * fv - f.scale(f.degree)


def test_euler_identity_on_monomial_sextic():
    # components u^6, u^5 v, u^4 v^2, u^2 v^4, u v^5, v^6
    for k in (0, 1, 2, 4, 5, 6):
        assert euler_defect(BinForm.monomial(6, k)).is_zero


def test_order_at():
    f = BinForm.of(1, 0, -1)  # (u-v)(u+v)
    assert bf_order_at(f, (gr(1), gr(1))) == 1
    assert bf_order_at(f, (gr(1), gr(2))) == 0
    sq = BinForm.of(1, -2, 1)  # (u-v)^2
    assert bf_order_at(sq, (gr(1), gr(1))) == 2
    assert bf_order_at(U * U * V, (gr(1), gr(0))) == 1
    assert bf_order_at(U * U * V, (gr(0), gr(1))) == 2


def test_zero_form_keeps_degree_tag():
    z = BinForm.zero(3)
    assert z.degree == 3
    with pytest.raises(InputError):
        z + BinForm.zero(2)
    assert (z * BinForm.zero(2)).degree == 5


small_coeff = st.integers(min_value=-3, max_value=3)


@st.composite
def small_form(draw, max_degree=4, allow_zero=False):
    d = draw(st.integers(min_value=1, max_value=max_degree))
    coeffs = [gr(draw(small_coeff)) for _ in range(d + 1)]
    form = BinForm(d, coeffs)
    if not allow_zero and form.is_zero:
        form = BinForm(d, coeffs[:-1] + [gr(1)])
    return form


@settings(max_examples=60, deadline=None)
@given(small_form(), small_form())
def test_gcd_divides_and_reconstructs(f, g):
    h = bf_gcd(f, g)
    cf = bf_divexact(f, h)
    cg = bf_divexact(g, h)
    assert cf * h == f
    assert cg * h == g


@settings(max_examples=60, deadline=None)
@given(small_form(), small_form())
def test_resultant_vanishes_iff_common_root(f, g):
    r = bf_resultant(f, g)
    shared = bf_gcd(f, g).degree >= 1
    assert (r == ZERO) == shared


@settings(max_examples=60, deadline=None)
@given(small_form(max_degree=6))
def test_euler_identity_random(f):
    assert euler_defect(f).is_zero
