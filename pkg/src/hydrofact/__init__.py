"""
Exact hydrogen bound states from operator factorization.

Energies, coordinate and momentum wavefunctions are built with exact
arithmetic (rationals times a square root and a power of sqrt(pi)) and
checked against each other; ``hydrofact.verify`` adds numerical oracles.
"""

from .errors import (
    DegreeMismatch,
    DomainError,
    HydrofactError,
    IncompatibleRadicals,
    NegativeLambda,
    NonPolynomialResult,
    NonPositiveLambda,
    NonPositiveRate,
    NotHomogeneous,
    ToleranceNotMet,
)
from .exactnum import ExactScalar, Poly1, exp_weighted_integral
from .harmonic import HarmonicPoly, Poly3, basis, laplacian, euler_degree, sphere_average
from .momentum import MomentumRadial, momentum_radial_closed, momentum_radial_pipeline, theta_me
from .opalgebra import MultOp, OpExpr, check_identity, commutator, normal_order, reduce_on_phi
from .radial import RadialState, chain_radial, closed_form_radial, radial_overlap, rodrigues_radial
from .spectrum import EigenState, build_state, energy, multiplet_table, norm_constant, verify_eigen

__version__ = "0.1.0"
