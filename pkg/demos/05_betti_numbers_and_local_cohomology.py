"""Graded Betti numbers (two independent routes) and local cohomology.

Run:  python3 demos/05_betti_numbers_and_local_cohomology.py
"""

import random

from lexdist.distraction import distract_ideal, random_distraction
from lexdist.groebner import Ideal, parse_poly
from lexdist.homology import (
    koszul_betti,
    local_coh_monomial,
    taylor_betti_oracle,
)
from lexdist.monomials import MonomialIdeal, hilbert_function

P = 32003

# Koszul strand ranks give beta_{ij}(A/I) for any homogeneous ideal:
square = MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
print("beta table of (x,y)^2:", koszul_betti(square, 5).as_dict())

# The Taylor complex is an independent oracle on monomial inputs:
print("taylor oracle agrees:",
      taylor_betti_oracle(square, 5).as_dict() == koszul_betti(square, 5).as_dict())

# Betti numbers are invariant under distraction (here a non-monomial ideal):
rng = random.Random(7)
D = random_distraction(rng, 2, P, columns=4)
print("distracted table:", koszul_betti(distract_ideal(D, square), 5).as_dict())

# General homogeneous input goes through normal forms:
hyper = Ideal(2, [parse_poly("x1^2 + x1*x2", 2, P)], P)
print("hypersurface:", koszul_betti(hyper, 5).as_dict())

# Local cohomology of monomial quotients, by degree-complex homology.
# Quotient by (x) is K[y]: H^1 is one-dimensional in every negative degree.
line = local_coh_monomial(MonomialIdeal(2, [(1, 0)]), window=(-5, 2))
print("K[y]: H^1 row over window [-5, 2]:", line.row(1))
print("      rows unbounded below:", line.unbounded_below,
      "| window truncated:", line.window_truncated)

# For Artinian quotients H^0 is everything:
art = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
table = local_coh_monomial(art, window=(0, 5))
print("artinian: H^0 row", table.row(0), "= Hilb", hilbert_function(art, 5))
