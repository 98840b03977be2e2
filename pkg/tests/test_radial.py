from fractions import Fraction
from math import exp, factorial

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.physics.hydrogen import R_nl

from hydrofact.errors import DomainError
from hydrofact.exactnum import ExactScalar, ONE, ZERO, Poly1, exp_weighted_integral
from hydrofact.radial import (
    RadialState,
    chain_radial,
    closed_form_radial,
    coord_norm_const,
    ground_state_series,
    radial_overlap,
    rodrigues_radial,
    series_coefficients,
)

r_sym = sympy.symbols("r", positive=True)


def _sym(c: ExactScalar):
    return (sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)) * sympy.sqrt(
        sympy.Rational(c.radicand.numerator, c.radicand.denominator)
    )


def _matches_sympy(state: RadialState) -> bool:
    ref = sympy.Poly(sympy.expand(sympy.simplify(R_nl(state.n, state.l, r_sym, 1) * sympy.exp(r_sym / state.n))), r_sym)
    ours = state.in_r()
    if ours.degree != ref.degree():
        return False
    for k in range(ours.degree + 1):
        if sympy.simplify(_sym(ExactScalar.coerce(ours[k])) - ref.coeff_monomial(r_sym**k)) != 0:
            return False
    return True


@pytest.mark.parametrize("n,l", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2), (4, 1), (5, 3), (6, 0)])
def test_closed_form_matches_sympy(n, l):
    assert _matches_sympy(closed_form_radial(n, l))


@pytest.mark.parametrize("n,l", [(2, 0), (3, 1), (4, 2), (5, 0)])
def test_chain_matches_sympy(n, l):
    assert _matches_sympy(chain_radial(n, l))


def test_closed_form_examples():
    assert closed_form_radial(1, 0).poly == Poly1((2,))
    assert closed_form_radial(2, 1).poly == Poly1((0, ExactScalar(Fraction(1, 12), 0, 6)))
    assert closed_form_radial(2, 1).in_r() == Poly1((0, ExactScalar(Fraction(1, 12), 0, 6)))
    assert chain_radial(4, 2) == closed_form_radial(4, 2)


def test_chain_examples():
    # (2,0): proportional to (2 - r) e^{-r/2}
    assert chain_radial(2, 0).in_r().scale(ExactScalar(2, 0, 2)) == Poly1((2, -1))
    # (3,1): proportional to (r^2/6 - r) e^{-r/3}
    p = chain_radial(3, 1).in_r()
    assert p.degree == 2 and p[0] == 0
    assert p[2] / p[1] == Fraction(-1, 6)
    for n in range(1, 8):
        top = chain_radial(n, n - 1, normalized=False).in_r()
        assert top == Poly1.monomial(n - 1).scale(coord_norm_const(n))


def test_coord_norm_const_examples():
    assert coord_norm_const(1) == 2
    assert coord_norm_const(2) == ExactScalar(Fraction(1, 12), 0, 6)
    for n in range(1, 11):
        c2 = (coord_norm_const(n) ** 2).to_fraction()
        assert exp_weighted_integral(Poly1.monomial(2 * n).scale(c2), Fraction(2, n)) == 1


def test_rodrigues_examples():
    for n in range(1, 8):
        assert rodrigues_radial(n, n - 1) == chain_radial(n, n - 1)
    assert rodrigues_radial(2, 0, normalized=False) == chain_radial(2, 0, normalized=False)


def test_three_routes_agree():
    for n in range(1, 11):
        for l in range(n):
            c = chain_radial(n, l)
            assert rodrigues_radial(n, l) == c
            assert closed_form_radial(n, l) == c
            assert c.poly.lowest_degree == l
            assert c.poly.degree == n - 1


def test_unnormalized_chain_sign():
    # the raw chain differs from the closed form by a constant of sign (-1)^(n-l-1)
    for n in range(1, 9):
        for l in range(n):
            raw = chain_radial(n, l, normalized=False)
            closed = closed_form_radial(n, l)
            ratio = raw.ratio_to(closed)
            assert ratio is not None
            assert ExactScalar.coerce(ratio).sign() == (-1) ** (n - l - 1)
            assert rodrigues_radial(n, l, normalized=False) == raw


def test_overlaps():
    assert radial_overlap(2, 1, 0) == ZERO
    assert radial_overlap(4, 3, 1) == ZERO
    for n in range(1, 9):
        for n2 in range(1, 9):
            for l in range(min(n, n2)):
                assert radial_overlap(n, n2, l) == (ONE if n == n2 else ZERO)


def test_overlap_numeric_oracle():
    from scipy.integrate import quad

    for n, n2, l in [(3, 3, 1), (4, 2, 0), (5, 5, 2)]:
        a, b = closed_form_radial(n, l), closed_form_radial(n2, l)
        val, _ = quad(lambda r: float(a(r) * b(r)) * r * r, 0, np.inf, epsabs=1e-13)
        assert val == pytest.approx(1.0 if n == n2 else 0.0, abs=1e-10)


def test_domain_errors():
    for fn in (chain_radial, rodrigues_radial, closed_form_radial):
        with pytest.raises(DomainError):
            fn(2, 2)
    with pytest.raises(DomainError):
        coord_norm_const(0)
    with pytest.raises(DomainError):
        radial_overlap(1, 2, 1)


def test_series_examples():
    assert ground_state_series(0.0, 5) == 1.0
    assert abs(ground_state_series(1.0, 60) - exp(-1)) < 1e-12
    assert abs(ground_state_series(10.0, 100) - exp(-10)) < 1e-12 * exp(-10)


def test_series_coefficients_from_operator():
    assert series_coefficients(8, via_operator=True) == series_coefficients(8)
    assert series_coefficients(4) == [1, -1, Fraction(1, 2), Fraction(-1, 6)]


@given(st.floats(0, 20), st.integers(100, 140))
def test_series_converges(r, terms):
    assert ground_state_series(r, terms) == pytest.approx(exp(-r), rel=1e-12, abs=1e-300)


def test_evaluation_is_vectorized():
    st_ = closed_form_radial(3, 1)
    rs = np.linspace(0, 10, 7)
    assert np.allclose(st_(rs), [st_(float(x)) for x in rs])
    assert st_(0.0) == 0.0
