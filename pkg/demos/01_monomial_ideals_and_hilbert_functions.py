"""Monomial ideals, standard monomials and truncated Hilbert functions.

Run:  python3 demos/01_monomial_ideals_and_hilbert_functions.py
"""

from lexdist.monomials import (
    MonomialIdeal,
    colon,
    format_monomial,
    hilbert_function,
    series_transform,
    slice_last_variable,
    standard_monomials,
)

# A monomial is a tuple of exponents; x^2 and xy in K[x, y]:
I = MonomialIdeal(2, [(2, 0), (1, 1)])
print("I =", I)

# Generators are minimalized automatically:
J = MonomialIdeal(2, [(2, 0), (2, 1), (1, 1)])
print("minimalized:", J, "| same ideal:", I == J)

# Standard monomials of each degree span the quotient A/I:
for d in range(4):
    basis = ", ".join(format_monomial(m) for m in standard_monomials(I, d))
    print(f"degree {d}: standard monomials {{{basis}}}")

# Their counts are the Hilbert function of A/I (always truncated):
print("Hilb(A/I) up to degree 6:", hilbert_function(I, 6))

# Colon ideals, last-variable slices, and stability of the slice chain:
print("(I : y) =", colon(I, (0, 1)))
print("slices along y:", [s.gens for s in slice_last_variable(I)])

# Series arithmetic on truncated Hilbert functions:
h = hilbert_function(I, 6)
print("numerator (multiply by (1-z)^2):", series_transform(h, 2))
print("two prefix sums (divide by (1-z)^2):", series_transform(h, -2))
