"""
Special polynomials with exact coefficients.

Laguerre polynomials (sum and Rodrigues constructions), the moment
polynomials ``Q_m`` in the variable ``w = xi**2``, reverse Bessel polynomials
(closed sum and derivative recurrence), the Gegenbauer series in
``u = 1/(1 + xi**2)`` and the expansion of ``(n+l)! L_{n-l-1}^{2l+1}(2x)`` in
reverse Bessel polynomials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DomainError
from .exactnum import ExactScalar, Poly1

__all__ = [
    "BesselExpansion",
    "laguerre",
    "laguerre_rodrigues",
    "q_recurrence",
    "q_closed",
    "reverse_bessel",
    "reverse_bessel_derivative_recurrence",
    "gegenbauer_series_u",
    "gegenbauer_recurrence",
    "bessel_expansion_coeffs",
    "bessel_expansion_closed",
    "vandermonde_check",
]


@lru_cache(maxsize=None)
def laguerre(k: int, alpha: int) -> Poly1:
    """Associated Laguerre polynomial ``L_k^alpha`` from its explicit sum."""
    return Poly1(
        Fraction((-1) ** j * comb(k + alpha, k - j), factorial(j)) for j in range(k + 1)
    )


def laguerre_rodrigues(k: int, alpha: int) -> Poly1:
    """``L_k^alpha`` from ``x^-alpha e^x d^k/dx^k (x^(k+alpha) e^-x) / k!``.

    The factor ``g(x) e^-x`` is tracked through ``g``; one derivative maps
    ``g`` to ``g' - g``.
    """
    g = Poly1.monomial(k + alpha)
    for _ in range(k):
        g = g.derivative() - g
    return g.divide_xpow(alpha) / factorial(k)


@lru_cache(maxsize=None)
def q_recurrence(m: int) -> Poly1:
    """Moment polynomial ``Q_m(w)`` from the two-term recurrence."""
    if m == 0:
        return Poly1((1,))
    if m == 1:
        return Poly1((3, -1))
    one_plus_w = Poly1((1, 1))
    return q_recurrence(m - 1).scale(2 * (m + 1)) - (one_plus_w * q_recurrence(m - 2)).scale(
        m * (m + 1)
    )


def q_closed(m: int) -> Poly1:
    """Moment polynomial ``Q_m(w)`` from its closed-form sum."""
    pref = Fraction(factorial(m + 2), 2)
    return Poly1(
        pref * (-1) ** j * Fraction(factorial(m + 1), factorial(m + 1 - 2 * j) * factorial(2 * j + 1))
        for j in range((m + 1) // 2 + 1)
    )


@lru_cache(maxsize=None)
def reverse_bessel(j: int) -> Poly1:
    """Reverse Bessel polynomial ``theta_j(x)`` from the closed sum."""
    coeffs = [Fraction(0)] * (j + 1)
    for m in range(j + 1):
        coeffs[j - m] = Fraction(factorial(j + m), factorial(j - m) * factorial(m) * 2**m)
    return Poly1(coeffs)


def reverse_bessel_derivative_recurrence(j: int) -> Poly1:
    """``theta_j`` built up by ``theta_j = sum_k d^k/dx^k [x theta_{j-1}(x)]``."""
    theta = Poly1((1,))
    for _ in range(j):
        g = theta.shift(1)
        acc = Poly1()
        while not g.is_zero():
            acc = acc + g
            g = g.derivative()
        theta = acc
    return theta


def gegenbauer_series_u(k: int, l: int) -> Poly1:
    """``C_k^{l+1}`` written as a polynomial in ``u = 1/(1 + xi^2)``.

    The Gegenbauer argument is ``t = (xi^2 - 1)/(xi^2 + 1) = 1 - 2u``.
    """
    n = k + l + 1
    coeffs = []
    for j in range(k + 1):
        num = (-1) ** j * 2 ** (2 * j + 1) * factorial(n + l + j) * factorial(j + l + 1)
        den = factorial(j) * factorial(n - l - j - 1) * factorial(2 * l + 2 * j + 2) * factorial(l)
        coeffs.append(Fraction(num, den))
    return Poly1(coeffs)


def gegenbauer_recurrence(k: int, alpha) -> Poly1:
    """Gegenbauer ``C_k^alpha(t)`` from the standard three-term recurrence."""
    alpha = Fraction(alpha)
    prev, cur = Poly1((1,)), Poly1((0, 2 * alpha))
    if k == 0:
        return prev
    for m in range(2, k + 1):
        nxt = (cur.shift(1).scale(2 * (m + alpha - 1)) - prev.scale(m + 2 * alpha - 2)) / m
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class BesselExpansion:
    """Coefficients ``c_k`` with ``sum_k c_k theta_k(x) = (n+l)! L_{n-l-1}^{2l+1}(2x)``."""

    n: int
    l: int
    coeffs: tuple

    def polynomial(self) -> Poly1:
        total = Poly1()
        for k, c in enumerate(self.coeffs):
            total = total + reverse_bessel(k).scale(c)
        return total

    @staticmethod
    def target(n: int, l: int) -> Poly1:
        lag = laguerre(n - l - 1, 2 * l + 1)
        return Poly1(c * 2**k * factorial(n + l) for k, c in enumerate(lag.coeffs))


def _check_nl(n: int, l: int) -> None:
    if n < 1 or not 0 <= l <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")


def bessel_expansion_coeffs(n: int, l: int) -> BesselExpansion:
    """Reverse-Bessel expansion via the general coefficient formula."""
    _check_nl(n, l)
    f = BesselExpansion.target(n, l)
    deg = n - l - 1
    coeffs = []
    for k in range(deg + 1):
        c = ExactScalar(0)
        for j in range(k + 1):
            diff = f[k + j] - f[k + j + 1] * (k + j + 1)
            if diff.is_zero():
                continue
            w = Fraction((-1) ** j * factorial(k + j), 2**j * factorial(j) * factorial(k - j))
            c = c + diff * w
        coeffs.append(c)
    return BesselExpansion(n, l, tuple(coeffs))


def bessel_expansion_closed(n: int, l: int) -> BesselExpansion:
    """Reverse-Bessel expansion coefficients from their closed form."""
    _check_nl(n, l)
    coeffs = []
    for k in range(n - l):
        num = (-1) ** k * 2**k * 2 * n * factorial(n + l) * factorial(n + l + k)
        den = factorial(k) * factorial(n - l - k - 1) * factorial(2 * l + 2 * k + 2)
        coeffs.append(ExactScalar(Fraction(num, den)))
    return BesselExpansion(n, l, tuple(coeffs))


def vandermonde_check(trials: int, seed: int = 0, max_n: int = 20) -> bool:
    """Check ``sum_j C(n,j) C(m,k-j) = C(n+m,k)`` on random ``n, m`` and all ``k``."""
    rng = random.Random(seed)
    for _ in range(trials):
        n, m = rng.randint(0, max_n), rng.randint(0, max_n)
        for k in range(n + m + 1):
            if sum(comb(n, j) * comb(m, k - j) for j in range(k + 1)) != comb(n + m, k):
                return False
    return True
