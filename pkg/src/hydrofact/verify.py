"""
Numerical cross-checks between the coordinate and momentum representations.

The exact modules never integrate numerically; this module does, so that the
two algebraic routes can be compared against an independent oracle. The
Fourier check evaluates

    sqrt(2/pi) int_0^inf j_l(p r) R_nl(r) r^2 dr

by quadrature and compares its magnitude with the momentum radial profile.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import DomainError, ToleranceNotMet
from .exactnum import Poly1
from .specialpoly import laguerre

__all__ = [
    "QuadratureConfig",
    "NonTerminating",
    "FourierReport",
    "spherical_jn",
    "ode_residual",
    "frobenius",
    "quad_normalize",
    "fourier_transform_radial",
    "fourier_check",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Settings for half-line integrals.

    ``scheme`` is ``"adaptive"`` (scipy QUADPACK) or ``"gauss"`` (composite
    Gauss-Legendre on ``panels`` equal subintervals of ``[0, upper_cutoff]``).
    """

    scheme: str = "adaptive"
    rel_tol: float = 1e-12
    max_subdivisions: int = 500
    upper_cutoff: float | None = None
    gauss_nodes: int = 64
    panels: int = 64

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.scheme not in ("adaptive", "gauss"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.scheme == "gauss" and self.upper_cutoff is None:
            raise ValueError("fixed-node scheme needs a finite upper_cutoff")


@dataclass(frozen=True)
class NonTerminating:
    """Marker returned when a Frobenius series does not end within ``max_terms``."""

    lam: Fraction
    l: int
    max_terms: int
    partial: tuple = field(default=(), repr=False)

    def __bool__(self):
        return False


@dataclass(frozen=True)
class FourierReport:
    n: int
    l: int
    p: np.ndarray
    transform: np.ndarray
    profile: np.ndarray
    max_deviation: float
    phase_spread: float


# -- spherical Bessel --------------------------------------------------------


def _j0(x):
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.sin(x) / x
    small = np.abs(x) < 1e-4
    x2 = x[small] ** 2
    out[small] = 1 - x2 / 6 + x2 * x2 / 120
    return out


def _j1(x):
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.sin(x) / x**2 - np.cos(x) / x
    small = np.abs(x) < 1e-2
    xs = x[small]
    x2 = xs * xs
    out[small] = xs / 3 * (1 - x2 / 10 + x2 * x2 / 280 - x2**3 / 15120)
    return out


def _jl_downward(l: int, x: np.ndarray) -> np.ndarray:
    """Miller's downward recurrence normalized against ``j_0``."""
    start = l + 20 + int(np.max(x, initial=0.0))
    nxt = np.zeros_like(x)
    cur = np.full_like(x, 1e-300)
    want = np.zeros_like(x)
    for k in range(start, 0, -1):
        prev = (2 * k + 1) / x * cur - nxt
        nxt, cur = cur, prev
        if k - 1 == l:
            want = cur.copy()
        # keep the recurrence in range
        big = np.abs(cur) > 1e250
        if np.any(big):
            cur[big] *= 1e-250
            nxt[big] *= 1e-250
            want[big] *= 1e-250
    return want * (_j0(x) / cur)


def spherical_jn(l: int, x):
    """Spherical Bessel function ``j_l(x)`` for ``x >= 0``.

    Closed forms for ``l <= 1``; for higher ``l`` upward recurrence where
    ``x > l`` and downward recurrence below.
    """
    if l < 0:
        raise DomainError("l must be non-negative")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    scalar = x.ndim == 1 and x.size == 1
    if l == 0:
        out = _j0(x)
    elif l == 1:
        out = _j1(x)
    else:
        out = np.zeros_like(x)
        up = x > l
        if np.any(up):
            xu = x[up]
            a, b = _j0(xu), _j1(xu)
            for k in range(1, l):
                a, b = b, (2 * k + 1) / xu * b - a
            out[up] = b
        down = (~up) & (x > 0)
        if np.any(down):
            out[down] = _jl_downward(l, x[down])
    return float(out[0]) if scalar else out


# -- exact checks ------------------------------------------------------------


def ode_residual(n: int, l: int) -> Poly1:
    """``rho f'' + (2l+2-rho) f' + (n-l-1) f`` for ``f = L_{n-l-1}^{2l+1}``."""
    if n < 1 or not 0 <= l <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")
    f = laguerre(n - l - 1, 2 * l + 1)
    d1 = f.derivative()
    d2 = d1.derivative()
    return d2.shift(1) + d1 * Poly1((2 * l + 2, -1)) + f.scale(n - l - 1)


def frobenius(lam, l: int, max_terms: int = 100):
    """Power-series solution of the radial equation with ``a_0 = 1``.

    Returns the polynomial when the series terminates, else
    :class:`NonTerminating`.
    """
    if max_terms < 1:
        raise DomainError("max_terms must be >= 1")
    lam = Fraction(lam)
    coeffs = [Fraction(1)]
    for k in range(max_terms):
        nxt = coeffs[-1] * (k + l + 1 - lam) / ((k + 1) * (k + 2 * l + 2))
        if nxt == 0:
            return Poly1(coeffs)
        coeffs.append(nxt)
    return NonTerminating(lam, l, max_terms, tuple(coeffs))


# -- quadrature --------------------------------------------------------------


def _weight_fn(weight) -> Callable:
    if callable(weight):
        return weight
    if weight in ("r2", "p2", "r^2", "p^2"):
        return lambda t: t * t
    if weight in (None, "1"):
        return lambda t: 1.0
    raise ValueError(f"unknown weight {weight!r}")


def quad_normalize(f: Callable, weight="r2", cfg: QuadratureConfig | None = None, g: Callable | None = None) -> float:
    """``int_0^cutoff f(t) conj(g(t)) w(t) dt`` with ``g = f`` by default."""
    cfg = cfg or QuadratureConfig()
    w = _weight_fn(weight)
    g = f if g is None else g

    def integrand(t):
        return float(np.real(f(t) * np.conj(g(t)))) * w(t)

    upper = np.inf if cfg.upper_cutoff is None else cfg.upper_cutoff
    if cfg.scheme == "gauss":
        nodes, wts = np.polynomial.legendre.leggauss(cfg.gauss_nodes)
        edges = np.linspace(0.0, upper, cfg.panels + 1)
        total = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            t = 0.5 * (b - a) * nodes + 0.5 * (a + b)
            vals = np.real(f(t) * np.conj(g(t))) * np.vectorize(w)(t)
            total += 0.5 * (b - a) * float(np.dot(wts, vals))
        return total
    # the error estimate is checked below, so scipy's warning is redundant
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(
            integrand, 0.0, upper, limit=cfg.max_subdivisions, epsabs=cfg.rel_tol * 1e-2, epsrel=cfg.rel_tol
        )
    if err > cfg.rel_tol * max(abs(val), 1.0):
        raise ToleranceNotMet(f"quadrature error estimate {err:.3e} exceeds {cfg.rel_tol:.1e}")
    return val


def fourier_transform_radial(radial: Callable, n: int, l: int, p: float, r_max: float | None = None, nodes: int = 40) -> float:
    """``sqrt(2/pi) int_0^r_max j_l(p r) R(r) r^2 dr`` by composite Gauss-Legendre.

    Panels are no wider than half an oscillation of ``j_l`` or the decay
    length ``n``, so a fixed node count per panel resolves the integrand.
    """
    r_max = n * (2 * n + 40) if r_max is None else r_max
    width = min(np.pi / p if p > 0 else r_max, float(n))
    panels = int(np.ceil(r_max / width))
    edges = np.linspace(0.0, r_max, panels + 1)
    x, wts = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    r = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    w = (half[:, None] * wts[None, :]).ravel()
    vals = spherical_jn(l, p * r) * np.real(radial(r)) * r * r
    return float(np.sqrt(2 / np.pi) * np.dot(w, vals))


def fourier_check(n: int, l: int, p_samples=None, tol: float | None = None) -> FourierReport:
    """Compare the transformed coordinate radial function with the momentum profile.

    The deviation at each sample is ``| |T(p)| - |F(p)| |`` divided by the
    largest ``|F|`` over the samples, so that nodes of the profile do not
    inflate the measure. ``phase_spread`` is the spread of the phase of
    ``F/T`` over samples where both are well away from zero.
    """
    from .momentum import momentum_radial_closed
    from .radial import closed_form_radial

    if n > 6:
        raise DomainError("fourier_check supports n <= 6")
    if p_samples is None:
        p_samples = np.logspace(-1.5, 1.0, 20) / n
    p = np.asarray(p_samples, dtype=float)
    rad = closed_form_radial(n, l)
    prof = momentum_radial_closed(n, l)
    transform = np.array([fourier_transform_radial(rad, n, l, pk) for pk in p])
    profile = np.array([complex(prof(pk)) for pk in p])
    scale = np.max(np.abs(profile))
    dev = float(np.max(np.abs(np.abs(transform) - np.abs(profile))) / scale)
    ok = (np.abs(profile) > 1e-3 * scale) & (np.abs(transform) > 1e-3 * scale)
    phases = np.angle(profile[ok] / transform[ok])
    spread = float(np.ptp(np.unwrap(phases))) if phases.size else 0.0
    report = FourierReport(n, l, p, transform, profile, dev, spread)
    if tol is not None and (dev > tol or spread > 1e-6):
        raise ToleranceNotMet(f"fourier check (n={n}, l={l}): deviation {dev:.3e}, phase spread {spread:.3e}")
    return report
