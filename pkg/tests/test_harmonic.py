from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from hydrofact.errors import DegreeMismatch, NotHomogeneous
from hydrofact.exactnum import ExactScalar, ONE, ZERO
from hydrofact.harmonic import (
    HarmonicPoly,
    Poly3,
    basis,
    euler_degree,
    harmonic_decomposition,
    laplacian,
    monomials,
    rational_basis,
    sphere_average,
    sphere_integral,
    sphere_monomial_average,
)

x, y, z = Poly3.monomial(1, 0, 0), Poly3.monomial(0, 1, 0), Poly3.monomial(0, 0, 1)


def _rank(polys, l):
    rows = []
    for p in polys:
        rows.append([sympy.Rational(p.terms.get(e, ZERO).re.numerator, p.terms.get(e, ZERO).re.denominator) for e in monomials(l)])
    return sympy.Matrix(rows).rank()


def test_laplacian_examples():
    assert laplacian(x * x - y * y).is_zero()
    assert laplacian(Poly3.r_squared()) == Poly3({(0, 0, 0): 6})
    assert laplacian(x * y * z).is_zero()


def test_euler_degree_examples():
    assert euler_degree(x) == 1
    assert euler_degree(Poly3({(2, 0, 0): -1, (0, 2, 0): -1, (0, 0, 2): 2})) == 2
    assert euler_degree(Poly3({(0, 0, 0): 1})) == 0
    with pytest.raises(NotHomogeneous):
        euler_degree(x + x * y)


def test_harmonic_poly_rejects_mixed_degree():
    with pytest.raises(NotHomogeneous):
        HarmonicPoly(2, {(1, 0, 0): 1, (2, 0, 0): 1})


def test_sphere_average_examples():
    assert sphere_average(x, x) == Fraction(1, 3)
    assert sphere_average(x * y, x * y) == Fraction(1, 15)
    assert sphere_average(x, y) == 0
    with pytest.raises(DegreeMismatch):
        sphere_average(x, x * y)


@pytest.mark.parametrize("exps", [(2, 0, 0), (2, 2, 0), (4, 0, 2), (2, 2, 2), (0, 0, 6), (1, 1, 0)])
def test_sphere_monomial_average_against_sympy(exps):
    th, ph = sympy.symbols("theta phi")
    a, b, c = exps
    f = (sympy.sin(th) * sympy.cos(ph)) ** a * (sympy.sin(th) * sympy.sin(ph)) ** b * sympy.cos(th) ** c
    val = sympy.integrate(sympy.integrate(f * sympy.sin(th), (ph, 0, 2 * sympy.pi)), (th, 0, sympy.pi)) / (4 * sympy.pi)
    got = sphere_monomial_average(a, b, c)
    assert sympy.nsimplify(val) == sympy.Rational(got.numerator, got.denominator)


def test_l0_basis():
    (b0,) = basis(0)
    assert b0.terms[(0, 0, 0)] == ExactScalar(Fraction(1, 2), 0, 1, -1)
    assert sphere_integral(b0, b0) == ONE


def test_l1_span():
    assert len(basis(1)) == 3
    assert _rank(list(rational_basis(1)) + [x, y, z], 1) == 3


def test_l2_span():
    ref = [x * y, y * z, z * x, x * x - y * y, Poly3({(2, 0, 0): -1, (0, 2, 0): -1, (0, 0, 2): 2})]
    rb = rational_basis(2)
    assert len(rb) == 5
    assert _rank(ref, 2) == 5
    assert _rank(list(rb) + ref, 2) == 5


@pytest.mark.parametrize("l", range(7))
def test_basis_invariants(l):
    b = basis(l)
    assert len(b) == 2 * l + 1
    for i, p in enumerate(b):
        assert laplacian(p).is_zero()
        assert euler_degree(p) == l
        for j, q in enumerate(b):
            assert sphere_integral(p, q) == (ONE if i == j else ZERO)


def test_basis_is_deterministic():
    basis.cache_clear()
    rational_basis.cache_clear()
    first = basis(3)
    basis.cache_clear()
    rational_basis.cache_clear()
    assert basis(3) == first


def test_basis_numeric_orthonormality():
    # Gauss-Legendre in cos(theta) times a uniform rule in phi
    nodes, wts = np.polynomial.legendre.leggauss(20)
    phis = np.linspace(0, 2 * np.pi, 41)[:-1]
    ct = nodes
    st_ = np.sqrt(1 - ct**2)
    pts = [(s * np.cos(p), s * np.sin(p), c, w * 2 * np.pi / len(phis)) for c, s, w in zip(ct, st_, wts) for p in phis]
    b = basis(2)
    for i, p in enumerate(b):
        for j, q in enumerate(b):
            tot = sum(float(np.real(p.evaluate(pt[:3]) * q.evaluate(pt[:3]))) * pt[3] for pt in pts)
            assert tot == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)


def test_decomposition_example():
    # z r^2 is already of the form r^2 h_1
    parts = harmonic_decomposition(z * Poly3.r_squared())
    assert set(parts) == {1}
    assert parts[1] == z
    parts = harmonic_decomposition(z * z)
    assert parts[0] == Poly3({(0, 0, 2): Fraction(2, 3), (2, 0, 0): Fraction(-1, 3), (0, 2, 0): Fraction(-1, 3)})
    assert parts[1] == Poly3({(0, 0, 0): Fraction(1, 3)})


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.integers(0, 4), st.data())
def test_decomposition_reconstructs(d, data):
    terms = {e: data.draw(coeffs) for e in monomials(d)}
    p = Poly3(terms)
    parts = harmonic_decomposition(p)
    total = Poly3()
    for j, h in parts.items():
        assert laplacian(h).is_zero()
        total = total + Poly3.r_squared(j) * h
    assert total == p
