"""Shakin ideals and the lex-embedding of quotient Hilbert functions.

A Shakin ideal is a piecewise-lex ideal (lex segments extended from the
subrings K[x1..xi]) plus pure powers x1^d1, ..., xr^dr with nondecreasing
exponents.  Quotients by Shakin ideals admit the lex-embedding: every
attainable Hilbert function is attained by base + lex-prefix pieces.

Run:  python3 demos/03_shakin_rings_and_lex_embeddings.py
"""

from lexdist.errors import ClosureError
from lexdist.monomials import MonomialIdeal, hilbert_function
from lexdist.shakin import (
    glue_ideals,
    is_admissible_hf,
    lex_embed,
    make_piecewise_lex,
    make_shakin,
    stable_lex_embedding,
)

# Build a Shakin ideal in K[x1, x2, x3]: piece (x1^2) from K[x1] plus the
# pure powers x1^2, x2^3 (the piece is absorbed by minimalization).
pl = make_piecewise_lex(3, [(1, MonomialIdeal(1, [(2,)]))])
a = make_shakin(pl, (2, 3))
print("Shakin ideal:", a.total)

# Take any ideal of the quotient and embed its Hilbert function:
I = MonomialIdeal(3, [(2, 0, 0), (0, 3, 0), (1, 1, 0), (0, 0, 2)])
h = hilbert_function(I, 5)
embedded = lex_embed(a, h, 5)
print("witness ideal HF:", h)
print("embedded ideal:  ", embedded)
print("same HF:", hilbert_function(embedded, 5) == h)

# Admissibility is decided by whether the construction goes through:
print("HF (1,4,...) admissible:", is_admissible_hf(a, (1, 4, 0)))

# Over a base that is NOT Shakin the greedy spans can fail to be an ideal;
# the failure is loud and names the degree:
bad_base = MonomialIdeal(2, [(0, 2)])
witness = MonomialIdeal(2, [(0, 2), (1, 1)])
try:
    lex_embed(bad_base, hilbert_function(witness, 3))
except ClosureError as err:
    print("over (x2^2):", err)

# Truncation can hide late generators of the embedded ideal; the stable
# embedding raises the cutoff until the result is provably complete:
a2 = make_shakin(make_piecewise_lex(3, [(1, MonomialIdeal(1, [(2,)]))]), ())
deep = MonomialIdeal(3, [(2, 0, 0), (1, 0, 2), (1, 2, 0)])
print("truncated:", lex_embed(a2, hilbert_function(deep, 3), 3))
print("stable:   ", stable_lex_embedding(a2, deep))

# Gluing: embedded degree slices of a compatible family assemble into one
# ideal (members must agree in the overlap degree).
one = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0)])
other = MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 0, 4)])
glued = glue_ideals(a2, [(2, one), (3, other)], 4)
print("glued:", glued)
