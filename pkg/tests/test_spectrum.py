from fractions import Fraction
from math import exp, sqrt

import numpy as np
import pytest
import sympy
from sympy.physics.hydrogen import R_nl

from hydrofact.errors import DomainError
from hydrofact.exactnum import ExactScalar, ONE
from hydrofact.harmonic import basis
from hydrofact.opalgebra import MultOp
from hydrofact.spectrum import (
    SYMBOLIC_MAX_N,
    build_state,
    eigen_ratio,
    energy,
    multiplet_table,
    norm_constant,
    verify_eigen,
)

POINTS = [(0.3, -0.7, 1.1), (1.9, 0.4, -0.2), (-2.5, 3.1, 0.8), (0.1, 0.2, 4.3)]


def _oracle_ratios(state):
    # the reduced state times exp(-r/n) must be a constant multiple of R_nl(r) P(r)/r^l
    r = sympy.symbols("r", positive=True)
    radial = sympy.lambdify(r, R_nl(state.n, state.l, r, 1))
    p = basis(state.l)[state.harmonic_index]
    out = []
    for pt in POINTS:
        rr = sqrt(sum(c * c for c in pt))
        ours = state.reduced.evaluate(pt) * exp(-rr / state.n)
        ref = radial(rr) * complex(p.evaluate(pt)) / rr**state.l
        out.append(ours / ref)
    return out


@pytest.mark.parametrize("n,l", [(n, l) for n in range(1, 5) for l in range(n)])
def test_chain_matches_textbook_wavefunction(n, l):
    ratios = _oracle_ratios(build_state(n, l))
    assert all(abs(q - ratios[0]) < 1e-10 * abs(ratios[0]) for q in ratios)


def test_build_examples():
    s = build_state(1, 0)
    assert s.reduced.scalar_ratio(MultOp({(0, 0, 0, 0): 1})) is not None
    s = build_state(2, 1, 0)
    assert basis(1)[0].terms.keys() == {(0, 0, 1)}
    assert s.reduced.scalar_ratio(MultOp({(0, 0, 1, 0): 1})) is not None
    s = build_state(2, 0)
    assert s.reduced.scalar_ratio(MultOp({(0, 0, 0, 1): 1, (0, 0, 0, 0): -2})) is not None


@pytest.mark.parametrize("n,l", [(1, 0), (3, 1), (4, 0)])
def test_verify_examples(n, l):
    assert verify_eigen(n, l).is_zero()


def test_all_eigenstates_up_to_four():
    for n in range(1, 5):
        for l in range(n):
            for m in range(2 * l + 1):
                assert verify_eigen(n, l, m).is_zero()
                assert eigen_ratio(build_state(n, l, m)) == energy(n)


def test_degree_bookkeeping():
    for n in range(1, 5):
        for l in range(n):
            lo, hi = build_state(n, l).degree_range()
            assert (lo, hi) == (l, n - 1)


def test_chain_parameters_are_forced():
    assert verify_eigen(3, 0, nus=(0, 1)).is_zero()
    for nus in ((1, 1), (0, 2), (Fraction(1, 2), 1)):
        assert not verify_eigen(3, 0, nus=nus).is_zero()
        assert eigen_ratio(build_state(3, 0, nus=nus)) is None
    assert not verify_eigen(3, 0, lam=Fraction(5, 2)).is_zero()


def test_energy_examples():
    assert energy(1) == Fraction(-1, 2)
    assert energy(2) == Fraction(-1, 8)
    assert energy(3) == Fraction(-1, 18)
    with pytest.raises(DomainError):
        energy(0)


def test_norm_constant_examples():
    for n in range(1, 6):
        assert norm_constant(n, n - 1) == ONE
    assert norm_constant(2, 0) == ExactScalar.sqrt(Fraction(8, 3))
    assert norm_constant(3, 1) == ExactScalar.sqrt(Fraction(72, 5))


def _radial_norm2(fn, n):
    # int |f|^2 d^3r via Gauss-Laguerre in r and a product rule on the sphere
    t, wt = np.polynomial.laguerre.laggauss(60)
    r = t * n / 2  # weight exp(-2r/n)
    ct, wc = np.polynomial.legendre.leggauss(16)
    phis = np.linspace(0, 2 * np.pi, 33)[:-1]
    total = 0.0
    for ri, wi in zip(r, wt):
        for c, w in zip(ct, wc):
            s = sqrt(1 - c * c)
            for ph in phis:
                pt = (ri * s * np.cos(ph), ri * s * np.sin(ph), ri * c)
                total += wi * w * (2 * np.pi / len(phis)) * abs(fn(pt)) ** 2 * ri * ri
    return total * n / 2


@pytest.mark.parametrize("n,l", [(2, 0), (3, 1), (3, 0)])
def test_norm_constant_preserves_seed_norm(n, l):
    state = build_state(n, l)
    seed = MultOp.from_poly3(basis(l)[0], rpow=n - l - 1)
    c = complex(norm_constant(n, l))
    got = _radial_norm2(lambda pt: c * state.reduced.evaluate(pt), n)
    ref = _radial_norm2(lambda pt: seed.evaluate(pt), n)
    assert got == pytest.approx(ref, rel=1e-10)


def test_multiplet_table():
    rows = multiplet_table(3)
    assert [r.degeneracy for r in rows] == [1, 4, 9]
    assert rows[1].l_list == (0, 1)
    for r in multiplet_table(12):
        assert r.degeneracy == r.n**2
        assert r.energy == energy(r.n)


def test_domain_errors():
    with pytest.raises(DomainError):
        build_state(2, 2)
    with pytest.raises(DomainError):
        build_state(2, 1, 3)
    with pytest.raises(DomainError):
        build_state(SYMBOLIC_MAX_N + 1, 0)
    with pytest.raises(DomainError):
        multiplet_table(0)
