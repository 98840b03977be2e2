"""
Bound-state construction by the radial raising chain.

An eigenstate with quantum numbers ``(n, l)`` and angular factor ``P`` (an
element of ``harmonic.basis(l)``) is

    B+(l) B+(l+1) ... B+(n-2) R^(n-l-1) P |phi_n>

and is represented by the multiplicative operator ``M`` with the state equal
to ``M |phi_n>``. ``verify_eigen`` applies ``H(1)`` to that state and
subtracts ``E(n) M`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import DomainError
from .exactnum import ExactScalar
from .harmonic import basis
from .opalgebra import MultOp, apply_to_phi, b_dag, ham

__all__ = [
    "EigenState",
    "MultipletRow",
    "SYMBOLIC_MAX_N",
    "build_state",
    "verify_eigen",
    "eigen_ratio",
    "energy",
    "norm_constant",
    "multiplet_table",
]

# the symbolic chain grows quickly; the radial module covers larger n
SYMBOLIC_MAX_N = 5


@dataclass(frozen=True)
class EigenState:
    """Reduced eigenstate ``M |phi_lam>``."""

    n: int
    l: int
    harmonic_index: int
    reduced: MultOp
    chain: tuple = field(default=())
    lam: Fraction = Fraction(0)

    def degree_range(self) -> tuple[int, int]:
        """Lowest and highest total position degree of the terms of ``reduced``."""
        degs = self.reduced.total_degrees()
        return min(degs), max(degs)


@dataclass(frozen=True)
class MultipletRow:
    n: int
    energy: ExactScalar
    l_list: tuple[int, ...]
    degeneracy: int


def _check(n: int, l: int, harmonic_index: int | None = None) -> None:
    if n < 1 or not 0 <= l <= n - 1:
        raise DomainError(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")
    if harmonic_index is not None and not 0 <= harmonic_index < 2 * l + 1:
        raise DomainError(f"harmonic index {harmonic_index} outside 0..{2 * l}")


def build_state(
    n: int,
    l: int,
    harmonic_index: int = 0,
    nus: Sequence | None = None,
    lam=None,
    max_n: int = SYMBOLIC_MAX_N,
) -> EigenState:
    """Apply the raising chain to ``R^(n-l-1) P |phi_lam>``.

    Parameters
    ----------
    n, l, harmonic_index
        Quantum numbers and index into ``basis(l)``.
    nus
        Chain parameters from left to right; defaults to ``l, l+1, ..., n-2``.
        Other values are only useful for negative tests.
    lam
        Scale of the seed ground state; defaults to ``n``.
    max_n
        Refuse larger ``n`` (the symbolic expansion grows combinatorially).
    """
    _check(n, l, harmonic_index)
    if n > max_n:
        raise DomainError(f"symbolic chain limited to n <= {max_n}")
    nus = tuple(Fraction(v) for v in (range(l, n - 1) if nus is None else nus))
    lam = Fraction(n if lam is None else lam)
    m = MultOp.from_poly3(basis(l)[harmonic_index], rpow=n - l - 1)
    for nu in reversed(nus):
        m = apply_to_phi(b_dag(nu), m, lam)
    return EigenState(n, l, harmonic_index, m, nus, lam)


def verify_eigen(n: int, l: int, harmonic_index: int = 0, **kwargs) -> MultOp:
    """Residual ``H(1) M |phi> - E(n) M |phi>`` as a multiplicative operator."""
    state = build_state(n, l, harmonic_index, **kwargs)
    hm = apply_to_phi(ham(1), state.reduced, state.lam)
    return hm - state.reduced * energy(n)


def eigen_ratio(state: EigenState):
    """Eigenvalue of ``H(1)`` on the state, or ``None`` if it is not an eigenstate."""
    hm = apply_to_phi(ham(1), state.reduced, state.lam)
    return hm.scalar_ratio(state.reduced)


def energy(n: int) -> ExactScalar:
    """``-1/(2 n^2)`` hartree."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return ExactScalar(Fraction(-1, 2 * n * n))


def norm_constant(n: int, l: int) -> ExactScalar:
    """``sqrt(2^(n-l-1) / prod_{j=l+1}^{n-1} (1/j^2 - 1/n^2))``."""
    _check(n, l)
    p = prod((Fraction(1, j * j) - Fraction(1, n * n) for j in range(l + 1, n)), start=Fraction(1))
    return ExactScalar.sqrt(Fraction(2 ** (n - l - 1)) / p)


def multiplet_table(max_n: int) -> list[MultipletRow]:
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        ls = tuple(range(n))
        rows.append(MultipletRow(n, energy(n), ls, sum(2 * l + 1 for l in ls)))
    return rows
