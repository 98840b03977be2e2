"""
Eigenstates and radial functions
================================

Construct eigenstates from the raising chain, confirm the eigenvalue exactly
and compare three routes to the radial function.
"""

import numpy as np

from hydrofact.harmonic import basis
from hydrofact.radial import chain_radial, closed_form_radial, radial_overlap, rodrigues_radial
from hydrofact.spectrum import build_state, eigen_ratio, multiplet_table, verify_eigen

# harmonic polynomials of degree 2, normalized on the unit sphere
for p in basis(2):
    print(p)

# the (n, l) = (3, 1) state, reduced to a multiplicative factor on |phi_3>
state = build_state(3, 1)
print(state.reduced)
print(eigen_ratio(state), verify_eigen(3, 1).is_zero())

# a wrong chain parameter breaks the eigenvalue equation
print(verify_eigen(3, 0, nus=(1, 1)).is_zero())

for row in multiplet_table(4):
    print(row.n, row.energy, row.l_list, row.degeneracy)

# three constructions of R_42 agree exactly
chain, rod, closed = chain_radial(4, 2), rodrigues_radial(4, 2), closed_form_radial(4, 2)
print(chain.poly)
print(chain == rod == closed)

# orthonormality by exact factorial integrals
print([str(radial_overlap(n, 3, 1)) for n in range(2, 6)])

r = np.linspace(0, 30, 7)
print(np.round(closed(r), 6))
