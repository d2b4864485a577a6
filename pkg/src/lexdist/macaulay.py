"""Macaulay binomial representations, growth bounds and lex-segment ideals."""

from __future__ import annotations

from .errors import InvalidInputError, NoLexIdealError
from .monomials import (
    MonomialIdeal,
    binom,
    degree_monomials,
    masks_to_ideal,
    shadow_mask,
)


def macaulay_rep(a: int, d: int):
    """The unique greedy binomial expansion of a in degree d.

    Returns pairs (a_i, i) with a = sum C(a_i, i), a_d > a_{d-1} > ... >= i.
    """
    if a < 0 or d < 1:
        raise InvalidInputError("need a >= 0 and d >= 1")
    rep = []
    rem = a
    i = d
    while rem > 0 and i >= 1:
        t = i
        while binom(t + 1, i) <= rem:
            t += 1
        rep.append((t, i))
        rem -= binom(t, i)
        i -= 1
    assert rem == 0
    return rep


def macaulay_bound(a: int, d: int) -> int:
    """a^<d>: the largest degree-(d+1) value Macaulay's theorem allows after a."""
    return sum(binom(t + 1, i + 1) for t, i in macaulay_rep(a, d))


def first_o_sequence_violation(values, n: int):
    """First degree at which values fails to be an O-sequence in n variables."""
    values = tuple(values)
    if not values:
        return None
    if values[0] > 1 or values[0] < 0:
        return 0
    if values[0] == 0:
        # the zero ring: everything must vanish
        for d, v in enumerate(values):
            if v != 0:
                return d
        return None
    if len(values) > 1 and not 0 <= values[1] <= n:
        return 1
    for d in range(1, len(values) - 1):
        if values[d + 1] < 0 or values[d + 1] > macaulay_bound(values[d], d):
            return d + 1
    return None


def is_o_sequence(values, n: int) -> bool:
    """Macaulay's growth criterion: H_0 <= 1, H_1 <= n and H_{d+1} <= H_d^<d>."""
    return first_o_sequence_violation(values, n) is None


def lex_segment(n: int, d: int, k: int):
    """The k lex-largest monomials of degree d in n variables."""
    monos = degree_monomials(n, d)
    if not 0 <= k <= len(monos):
        raise InvalidInputError(f"segment size {k} out of range 0..{len(monos)}")
    return list(monos[:k])


def lex_ideal_for_hf(n: int, values) -> MonomialIdeal:
    """The lex-segment ideal whose quotient Hilbert function matches values.

    values is read as the Hilbert function of A/L up to dmax = len(values)-1;
    generators of degree <= dmax are produced and agreement is guaranteed up
    to dmax (beyond that the ideal continues by its own growth).
    """
    values = tuple(values)
    bad = first_o_sequence_violation(values, n)
    if bad is not None:
        raise NoLexIdealError(bad)
    masks = []
    prev = 0
    for d, h in enumerate(values):
        total = binom(d + n - 1, n - 1)
        size = total - h
        mask = (1 << size) - 1
        # Macaulay growth makes the shadow of the previous prefix a sub-prefix
        grown = shadow_mask(n, d - 1, prev) if d > 0 else 0
        assert grown & ~mask == 0, "lex construction lost ideal closure"
        masks.append(mask)
        prev = mask
    return masks_to_ideal(n, masks)
