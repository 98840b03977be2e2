"""
Operator algebra on hydrogen
============================

Build the lowering operators, normal-order products of them and check a few
identities exactly. Run with ``python demos/01_operator_algebra.py``.
"""

from fractions import Fraction

from hydrofact.exactnum import I
from hydrofact.opalgebra import (
    OpExpr,
    a_dag,
    a_op,
    b_dag,
    commutator,
    ham,
    kinetic,
    normal_order,
    pr,
    r_pow,
    reduce_on_phi,
    tperp,
)

# moving a momentum past 1/R leaves an x/R^3 term behind
print(normal_order(["px", "R^-1"]))

# the radial momentum is canonically conjugate to R
print(commutator(r_pow(1), pr()))

# sum of A^dagger A over the three axes at lambda = 2
lam = Fraction(2)
total = sum((a_dag(lam, ax) * a_op(lam, ax) for ax in range(3)), OpExpr())
print(total == kinetic() - r_pow(-1) * (1 / lam) + 1 / (2 * lam * lam))

# the perpendicular kinetic energy commutes with R and shifts under p_r
print(commutator(tperp(), r_pow(1)).is_zero())
print(commutator(pr(), tperp()) == r_pow(-1) * tperp() * (2 * I))

# acting on the auxiliary ground state, momenta turn into multiplicative factors
print(reduce_on_phi(pr(), 3))
print(reduce_on_phi(tperp(), 3))

# a two-step raising chain applied to R^2 |phi_3> and then H(1)
state = reduce_on_phi(b_dag(0) * b_dag(1) * r_pow(2), 3)
print(state)
hs = reduce_on_phi(ham(1) * b_dag(0) * b_dag(1) * r_pow(2), 3)
print(hs.scalar_ratio(state))
