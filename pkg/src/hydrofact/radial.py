"""
Coordinate-space radial functions with exact coefficients.

Three independent constructions are provided:

* ``chain_radial``: repeated action of the radial raising operator on
  ``r^mu e^{-r/n}``, which maps each power to itself and the next lower one;
* ``rodrigues_radial``: the radial-momentum Rodrigues formula, evaluated by
  polynomial calculus on ``g(r) e^{-2r/n}``;
* ``closed_form_radial``: the associated Laguerre closed form.

All three return a :class:`RadialState` holding a polynomial in
``rho = 2r/n`` (the factor ``e^{-rho/2}`` is implicit). Normalized states use
the convention that the coefficient of ``rho^l`` is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, factorial

from .errors import DomainError
from .exactnum import ExactScalar, I, ONE, Poly1, exp_weighted_integral
from .specialpoly import laguerre
from .spectrum import norm_constant

__all__ = [
    "RadialState",
    "chain_radial",
    "rodrigues_radial",
    "closed_form_radial",
    "coord_norm_const",
    "rodrigues_prefactor",
    "radial_overlap",
    "ground_state_series",
    "series_coefficients",
]

_INV_SQRT2 = ExactScalar(Fraction(1, 2), 0, 2)


@dataclass(frozen=True)
class RadialState:
    """``R_nl = poly(rho) e^{-rho/2}`` with ``rho = 2r/n``."""

    n: int
    l: int
    poly: Poly1

    def in_r(self) -> Poly1:
        """Same polynomial written in ``r`` (the exponential is ``e^{-r/n}``)."""
        scale = Fraction(2, self.n)
        return Poly1(c * scale**k for k, c in enumerate(self.poly.coeffs))

    def __call__(self, r):
        """Float value at radius ``r`` (scalar or numpy array)."""
        rho = 2 * r / self.n
        val = self.poly.eval_float(rho)
        try:
            import numpy as np

            return val * np.exp(-rho / 2)
        except ImportError:  # pragma: no cover
            return val * exp(-rho / 2)

    def ratio_to(self, other: RadialState):
        """Scalar ``c`` with ``self = c * other``, else ``None``."""
        if (self.n, self.l) != (other.n, other.l) or self.poly.degree != other.poly.degree:
            return None
        k0 = other.poly.lowest_degree
        c = self.poly[k0] / other.poly[k0]
        return c if self.poly == other.poly.scale(c) else None

    def sign_normalized(self) -> RadialState:
        lead = self.poly[self.poly.lowest_degree]
        return self if lead.sign() > 0 else RadialState(self.n, self.l, -self.poly)


def _check(n: int, l: int) -> None:
    if n < 1 or not 0 <= l <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")


def coord_norm_const(n: int) -> ExactScalar:
    """``(2/n)^(n+1/2) / sqrt((2n)!)``, the value at the origin of the normalized seed."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return ExactScalar.sqrt(Fraction(2, n) ** (2 * n + 1) / factorial(2 * n))


def _from_r(n: int, l: int, p: Poly1) -> RadialState:
    half_n = Fraction(n, 2)
    return RadialState(n, l, Poly1(c * half_n**k for k, c in enumerate(p.coeffs)))


def chain_radial(n: int, l: int, normalized: bool = True) -> RadialState:
    """Radial function from the raising-operator recurrence.

    With ``normalized=False`` the result is ``(-i)^(n-l-1)`` times the chain
    applied to the normalized seed ``r^(n-1) e^{-r/n}``, with no sign
    adjustment.
    """
    _check(n, l)
    a = Poly1.monomial(n - 1)
    for lam in range(n - 2, l - 1, -1):
        diag = Fraction(1, n) + Fraction(1, lam + 1)
        new = [a[mu] * diag - a[mu + 1] * (mu + lam + 3) for mu in range(a.degree + 1)]
        a = Poly1(new).scale(I * _INV_SQRT2)
    k = n - l - 1
    a = a.scale((-I) ** k * coord_norm_const(n))
    state = _from_r(n, l, a)
    if normalized:
        state = RadialState(n, l, state.poly.scale(norm_constant(n, l))).sign_normalized()
    return state


def rodrigues_prefactor(n: int, l: int) -> ExactScalar:
    """``(2n-1)! l! / (2^(n-l-1) (n+l)! (n-1)!) * (1/sqrt 2)^(n-l-1)``."""
    _check(n, l)
    k = n - l - 1
    base = Fraction(factorial(2 * n - 1) * factorial(l), 2**k * factorial(n + l) * factorial(n - 1))
    return _INV_SQRT2**k * base


def rodrigues_radial(n: int, l: int, normalized: bool = True) -> RadialState:
    """Radial function from the radial-momentum Rodrigues formula.

    Each radial-momentum commutator differentiates; on ``g e^{-2r/n}`` one
    derivative maps ``g`` to ``g' - (2/n) g``.
    """
    _check(n, l)
    k = n - l - 1
    g = Poly1.monomial(n + l)
    two_over_n = Fraction(2, n)
    for _ in range(k):
        g = g.derivative() - g.scale(two_over_n)
    # r^(-l-1) g; the lowest power of g is 2l+1
    p = g.divide_xpow(l + 1)
    # (-i)^k from the commutators, another (-i)^k from the phase convention
    p = p.scale(rodrigues_prefactor(n, l) * (-1) ** k * coord_norm_const(n))
    state = _from_r(n, l, p)
    if normalized:
        state = RadialState(n, l, state.poly.scale(norm_constant(n, l))).sign_normalized()
    return state


def closed_form_radial(n: int, l: int) -> RadialState:
    """``sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!)) rho^l L_{n-l-1}^{2l+1}(rho)``."""
    _check(n, l)
    pref = ExactScalar.sqrt(Fraction(2, n) ** 3 * Fraction(factorial(n - l - 1), 2 * n * factorial(n + l)))
    poly = laguerre(n - l - 1, 2 * l + 1).shift(l).scale(pref)
    return RadialState(n, l, poly)


def radial_overlap(n: int, n2: int, l: int, route: str = "chain") -> ExactScalar:
    """Exact ``int_0^inf R_nl R_n2l r^2 dr`` using factorial integrals."""
    _check(n, l)
    _check(n2, l)
    make = {"chain": chain_radial, "rodrigues": rodrigues_radial, "closed": closed_form_radial}[route]
    p = make(n, l).in_r() * make(n2, l).in_r()
    return exp_weighted_integral(p.shift(2), Fraction(1, n) + Fraction(1, n2))


def series_coefficients(terms: int, via_operator: bool = False) -> list[Fraction]:
    """Coefficients ``c_k`` of ``sum_k c_k r^k`` for the ground-state series.

    The k-th term is ``(i r)^k / k!`` times the eigenvalue of
    ``(p_r + i/R)^k`` on the ground state. With ``via_operator=True`` that
    eigenvalue is obtained from the operator engine rather than assumed.
    """
    if terms < 1:
        raise DomainError("need at least one term")
    if not via_operator:
        return [Fraction((-1) ** k, factorial(k)) for k in range(terms)]
    from .opalgebra import MultOp, apply_to_phi, pr, r_pow

    shifted = pr() + r_pow(-1) * I
    state = MultOp({(0, 0, 0, 0): 1})
    out = []
    for k in range(terms):
        eig = state.scalar_ratio(MultOp({(0, 0, 0, 0): 1}))
        if eig is None:
            raise ArithmeticError(f"power {k} does not act as a scalar")
        out.append(((I**k) * eig / factorial(k)).to_fraction())
        state = apply_to_phi(shifted, state, 1)
    return out


def ground_state_series(r: float, terms: int = 100) -> float:
    """Partial sum ``sum_{k<terms} (-r)^k / k!`` evaluated in exact arithmetic."""
    if r < 0:
        raise DomainError("r must be non-negative")
    x = Fraction(r)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        total += term
        term = term * (-x) / (k + 1)
    return float(total)
