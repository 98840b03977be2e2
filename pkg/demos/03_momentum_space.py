"""
Momentum-space wavefunctions
============================

Assemble momentum profiles from matrix elements of reverse Bessel
polynomials, compare with the Gegenbauer closed form and with a numerical
Fourier transform of the coordinate-space function.
"""

import numpy as np

from hydrofact.momentum import moment, momentum_radial_closed, momentum_radial_pipeline, theta_me_from_moments
from hydrofact.specialpoly import q_recurrence, reverse_bessel
from hydrofact.verify import fourier_check, quad_normalize

print(q_recurrence(2), reverse_bessel(3))

# moments of R on the momentum seed carry (1 + xi^2)^-m
print(moment(2, 3))

# combining moments through theta_m collapses to a single constant numerator
print(theta_me_from_moments(4, 3).reduced())

# two routes to the (5, 2) profile
pipe, closed = momentum_radial_pipeline(5, 2), momentum_radial_closed(5, 2)
print(pipe == closed)
print(closed.reduced())

# normalization in momentum space and agreement with the Hankel transform
print(quad_normalize(closed, "p2"))
rep = fourier_check(4, 2)
print(rep.max_deviation, rep.phase_spread)
print(np.round(np.abs(rep.profile[:5]), 8))
