"""
Momentum-space radial functions as exact rational functions of ``w = xi^2``.

With ``xi = n p`` (Hartree units) every profile has the form

    prefactor * xi^l * numerator(w) / (1 + w)^k

and is stored as a :class:`MomentumRadial`. Matrix elements are quoted
relative to the momentum-space seed ``<p|phi_n>`` unless stated otherwise.
The full wavefunction is ``psi_nl(p) = F(p) P(p)/p^l`` where ``F`` is the
radial profile and ``P/p^l`` is a normalized harmonic on the unit sphere; the
profile satisfies ``int_0^inf |F|^2 p^2 dp = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt

import numpy as np

from .errors import DegreeMismatch, DomainError
from .exactnum import ExactScalar, I, ONE, Poly1
from .harmonic import Poly3, euler_degree
from .specialpoly import bessel_expansion_coeffs, gegenbauer_series_u, q_recurrence, reverse_bessel

__all__ = [
    "MomentumRadial",
    "moment",
    "theta_me",
    "theta_me_from_moments",
    "zero_norm",
    "phi_momentum",
    "momentum_radial_pipeline",
    "momentum_radial_closed",
    "harmonic_momentum_factor",
    "psi_momentum",
]

_ONE_PLUS_W = Poly1((1, 1))


@dataclass(frozen=True)
class MomentumRadial:
    """``prefactor * xi^xi_power * numerator(xi^2) / (1 + xi^2)^denom_power`` with ``xi = n p``."""

    n: int
    l: int
    numerator: Poly1
    denom_power: int
    prefactor: ExactScalar = ONE
    xi_power: int = 0

    def scaled_numerator(self, denom_power: int) -> Poly1:
        """Numerator times the prefactor over the common denominator ``(1+w)^denom_power``."""
        extra = denom_power - self.denom_power
        if extra < 0:
            raise ValueError("cannot lower the denominator power")
        return (self.numerator * _ONE_PLUS_W**extra).scale(self.prefactor)

    def __eq__(self, other):
        if not isinstance(other, MomentumRadial):
            return NotImplemented
        if (self.n, self.xi_power) != (other.n, other.xi_power):
            return False
        k = max(self.denom_power, other.denom_power)
        return self.scaled_numerator(k) == other.scaled_numerator(k)

    def __hash__(self):
        return hash((self.n, self.xi_power))

    def reduced(self) -> MomentumRadial:
        """Cancel common factors of ``(1 + w)`` between numerator and denominator."""
        num, k = self.numerator, self.denom_power
        while k > 0 and not num.is_zero():
            q, r = num.divmod(_ONE_PLUS_W)
            if not r.is_zero():
                break
            num, k = q, k - 1
        return MomentumRadial(self.n, self.l, num, k, self.prefactor, self.xi_power)

    def __call__(self, p):
        """Complex value at momentum magnitude ``p`` (scalar or array)."""
        xi = self.n * np.asarray(p, dtype=float)
        w = xi * xi
        val = complex(self.prefactor) * self.numerator.eval_float(w) / (1 + w) ** self.denom_power
        return val * xi**self.xi_power

    def magnitude(self, p):
        return np.abs(self(p))


def _check(n: int, l: int) -> None:
    if n < 1 or not 0 <= l <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")


def moment(m: int, n: int) -> MomentumRadial:
    """``<p|R^m|phi_n> / <p|phi_n> = Q_m(w) n^m / (1 + w)^m``."""
    if m < 0:
        raise DomainError("moment order must be non-negative")
    return MomentumRadial(n, 0, q_recurrence(m), m, ExactScalar(n**m))


def theta_me_from_moments(m: int, n: int) -> MomentumRadial:
    """``<p|theta_m(R/n)|phi_n> / <p|phi_n>`` by expanding ``theta_m`` in powers."""
    theta = reverse_bessel(m)
    num = Poly1()
    for j, t in enumerate(theta.coeffs):
        mu = moment(j, n)
        num = num + mu.scaled_numerator(m).scale(t / Fraction(n) ** j)
    return MomentumRadial(n, 0, num, m)


def theta_me(m: int, n: int, check: bool = False) -> MomentumRadial:
    """``(m+1)! 2^m / (1 + w)^m``, optionally confirmed against the moment expansion."""
    if m < 0:
        raise DomainError("order must be non-negative")
    closed = MomentumRadial(n, 0, Poly1((factorial(m + 1) * 2**m,)), m)
    if check and theta_me_from_moments(m, n) != closed:
        raise ArithmeticError(f"theta matrix element mismatch at m={m}, n={n}")
    return closed


def zero_norm(n: int) -> ExactScalar:
    """``4 sqrt(2) n^(3/2) / sqrt(pi)``, the seed profile at ``p = 0``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return ExactScalar(4, 0, 2 * n**3, -1)


def phi_momentum(n: int) -> MomentumRadial:
    """Normalized seed profile ``zero_norm(n) / (1 + w)^2``."""
    return MomentumRadial(n, 0, Poly1((1,)), 2, zero_norm(n))


def momentum_radial_pipeline(n: int, l: int) -> MomentumRadial:
    """Radial profile assembled from the reverse-Bessel expansion and theta matrix elements."""
    _check(n, l)
    coeffs = bessel_expansion_coeffs(n, l).coeffs
    k_max = n - 1
    num = Poly1()
    for k, c in enumerate(coeffs):
        num = num + theta_me(k + l, n).scaled_numerator(k_max).scale(c)
    pref = (
        (-I) ** l
        * ExactScalar.sqrt(Fraction(factorial(n - l - 1), n * factorial(n + l) ** 3))
        * 2**l
        * zero_norm(n)
    )
    return MomentumRadial(n, l, num, k_max + 2, pref, l)


def momentum_radial_closed(n: int, l: int) -> MomentumRadial:
    """``sqrt(2 (n-l-1)!/(pi (n+l)!)) n^2 xi^l C_{n-l-1}^{l+1}(t) 2^(2l+2) l! u^(l+2)``.

    Here ``u = 1/(1 + xi^2)`` and ``t = 1 - 2u``; the phase is ``(-i)^l``.
    """
    _check(n, l)
    series = gegenbauer_series_u(n - l - 1, l)
    k_max = n - l - 1
    # sum_j g_j u^j over (1+w)^k_max
    num = Poly1()
    for j, g in enumerate(series.coeffs):
        num = num + (_ONE_PLUS_W ** (k_max - j)).scale(g)
    pref = (
        (-I) ** l
        * ExactScalar(1, 0, Fraction(2 * factorial(n - l - 1), factorial(n + l)), -1)
        * (n * n * 2 ** (2 * l + 2) * factorial(l))
    )
    return MomentumRadial(n, l, num, k_max + l + 2, pref, l)


def harmonic_momentum_factor(l: int, poly: Poly3, p_vec):
    """Evaluate the harmonic polynomial at the momentum vector.

    Exact (``ExactScalar``) for rational components, float otherwise.
    """
    deg = euler_degree(poly)
    if deg != l and not poly.is_zero():
        raise DegreeMismatch(f"polynomial has degree {deg}, expected {l}")
    if all(isinstance(c, (int, Fraction)) for c in p_vec):
        total = ExactScalar(0)
        for (a, b, c), v in poly.terms.items():
            total = total + v * (Fraction(p_vec[0]) ** a * Fraction(p_vec[1]) ** b * Fraction(p_vec[2]) ** c)
        return total
    return poly.evaluate(tuple(float(c) for c in p_vec))


def psi_momentum(n: int, l: int, poly: Poly3, p_vec) -> complex:
    """Full momentum wavefunction ``F(p) P(p) / p^l`` at a momentum vector."""
    _check(n, l)
    prof = momentum_radial_closed(n, l)
    p = sqrt(sum(float(c) ** 2 for c in p_vec))
    w = (n * p) ** 2
    # xi^l / p^l = n^l, which avoids dividing by p at the origin
    radial = complex(prof.prefactor) * prof.numerator.eval_float(w) / (1 + w) ** prof.denom_power * n**l
    return radial * complex(harmonic_momentum_factor(l, poly, [float(c) for c in p_vec]))
