"""Macaulay's growth bound and lex-segment ideals realizing Hilbert functions.

Run:  python3 demos/02_macaulay_growth_and_lex_ideals.py
"""

from lexdist.macaulay import (
    is_o_sequence,
    lex_ideal_for_hf,
    lex_segment,
    macaulay_bound,
    macaulay_rep,
)
from lexdist.monomials import MonomialIdeal, format_monomial, hilbert_function

# The binomial ("Macaulay") representation of 5 in degree 2 and the bound
# it imposes on the next value of a Hilbert function:
print("5 in degree 2:", " + ".join(f"C({t},{i})" for t, i in macaulay_rep(5, 2)))
print("largest successor of 5 in degree 3:", macaulay_bound(5, 2))

# O-sequences are exactly the Hilbert functions of graded quotients:
for h in [(1, 3, 6), (1, 2, 5), (1, 2, 3, 2, 2)]:
    print(h, "is an O-sequence in 3 variables:", is_o_sequence(h, 3))

# The k lex-largest monomials of a given degree form a prefix chain:
print("lex segments of degree 2 in x, y:")
for k in range(4):
    print(f"  k={k}:", [format_monomial(m) for m in lex_segment(2, 2, k)])

# Every attainable Hilbert function is attained by a unique lex ideal:
target = (1, 2, 2, 1, 0)
L = lex_ideal_for_hf(2, target)
print("lex ideal for", target, "->", L)
print("check:", hilbert_function(L, 4))

# ... and the same round trip works for the Hilbert function of any ideal:
I = MonomialIdeal(3, [(1, 1, 0), (0, 0, 2)])
h = hilbert_function(I, 6)
print("random-ish ideal HF:", h)
print("its lex ideal:", lex_ideal_for_hf(3, h))
