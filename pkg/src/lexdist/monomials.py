"""Monomials, monomial orders, monomial ideals and their Hilbert functions.

Monomials are exponent tuples of fixed length n.  Degree-d monomials are
always enumerated in descending lexicographic order (x1 > x2 > ... > xn),
so lex segments are prefixes of the canonical enumeration; most graded
computations run on bitmasks over that enumeration.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache, reduce

from .errors import InvalidInputError

Monomial = tuple  # exponent vector, length = ambient variable count


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def degree(m) -> int:
    return sum(m)


def divides(a, b) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def unit(n):
    return (0,) * n


def variable(n, i):
    """The monomial x_{i+1} in n variables (0-based index i)."""
    e = [0] * n
    e[i] = 1
    return tuple(e)


# ---------------------------------------------------------------------------
# canonical degree-d enumeration and bitmask tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def degree_monomials(n: int, d: int):
    """All degree-d monomials in n variables, descending lex."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []

    def rec(prefix, rest, k):
        if k == 1:
            out.append(prefix + (rest,))
            return
        for e in range(rest, -1, -1):
            rec(prefix + (e,), rest - e, k - 1)

    rec((), d, n)
    return tuple(out)


@lru_cache(maxsize=None)
def degree_index(n: int, d: int):
    return {m: i for i, m in enumerate(degree_monomials(n, d))}


@lru_cache(maxsize=None)
def mult_table(n: int, d: int):
    """mult_table(n, d)[k][i] = index of x_{i+1} * m_k inside degree d+1."""
    idx = degree_index(n, d + 1)
    table = []
    for m in degree_monomials(n, d):
        table.append(tuple(idx[mul(m, variable(n, i))] for i in range(n)))
    return tuple(table)


@lru_cache(maxsize=None)
def shadow_table(n: int, d: int):
    """shadow_table(n, d)[k] = bitmask of the degree-(d+1) multiples of m_k."""
    table = []
    for row in mult_table(n, d):
        mask = 0
        for j in row:
            mask |= 1 << j
        table.append(mask)
    return tuple(table)


def shadow_mask(n: int, d: int, mask: int) -> int:
    """Bitmask of degree-(d+1) monomials divisible by some set bit of mask."""
    table = shadow_table(n, d)
    out = 0
    while mask:
        low = mask & -mask
        out |= table[low.bit_length() - 1]
        mask ^= low
    return out


def mask_to_monomials(n: int, d: int, mask: int):
    monos = degree_monomials(n, d)
    return [monos[i] for i in range(len(monos)) if mask >> i & 1]


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total order on monomials given by a sortable key (bigger key = bigger)."""

    def key(self, exps):
        raise NotImplementedError

    def cache_key(self):
        return repr(self)

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


class LexOrder(MonomialOrder):
    def key(self, exps):
        return exps

    def __repr__(self):
        return "lex"


class DegRevLexOrder(MonomialOrder):
    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        return "degrevlex"


class WeightOrder(MonomialOrder):
    """Weight vector order, ties broken by another (global) order."""

    def __init__(self, weights, tiebreak=None):
        self.weights = tuple(weights)
        self.tiebreak = tiebreak or DegRevLexOrder()

    def key(self, exps):
        w = sum(a * b for a, b in zip(self.weights, exps))
        return (w, self.tiebreak.key(exps))

    def __repr__(self):
        return f"weight{self.weights}+{self.tiebreak!r}"


def make_order(kind: str, weights=None, tiebreak: str = "degrevlex") -> MonomialOrder:
    if kind == "lex":
        return LexOrder()
    if kind == "degrevlex":
        return DegRevLexOrder()
    if kind == "weighted":
        if weights is None:
            raise InvalidInputError("weighted order needs a weight vector")
        tb = LexOrder() if tiebreak == "lex" else DegRevLexOrder()
        return WeightOrder(weights, tb)
    raise InvalidInputError(f"unknown order kind {kind!r}")


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------

def _minimal_generators(gens, n):
    gens = sorted(set(map(tuple, gens)), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if len(m) != n or any(e < 0 for e in m):
            raise InvalidInputError(f"bad exponent vector {m} for n={n}")
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal, stored as its antichain of minimal generators.

    Canonical generator order is (degree, exponent tuple) ascending, so
    equality and hashing are structural.  The zero ideal has no generators;
    the unit ideal is generated by the unit monomial.
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n, gens=()):
        self.n = int(n)
        if self.n < 0:
            raise InvalidInputError("variable count must be nonnegative")
        self.gens = _minimal_generators(gens, self.n)
        self._hash = hash((self.n, self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    def contains(self, m) -> bool:
        if len(m) != self.n:
            raise InvalidInputError(f"monomial {m} has wrong length for n={self.n}")
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m):
        return self.contains(m)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return self._hash

    def __le__(self, other):
        """Ideal inclusion."""
        return all(other.contains(g) for g in self.gens)

    def __repr__(self):
        inside = ", ".join(format_monomial(g) for g in self.gens) or "0"
        return f"MonomialIdeal(n={self.n}; {inside})"

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        try:
            return cls(data["n"], [tuple(g) for g in data["gens"]])
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad monomial ideal JSON: {exc}") from exc


def minimalize(gens, n) -> MonomialIdeal:
    """The divisibility antichain generating the same ideal."""
    return MonomialIdeal(n, gens)


def contains(ideal: MonomialIdeal, m) -> bool:
    return ideal.contains(m)


def colon(ideal: MonomialIdeal, m) -> MonomialIdeal:
    """The quotient ideal (I : m)."""
    if len(m) != ideal.n:
        raise InvalidInputError("colon: monomial length mismatch")
    return MonomialIdeal(
        ideal.n,
        [tuple(max(g - e, 0) for g, e in zip(gen, m)) for gen in ideal.gens],
    )


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of two monomial ideals (pairwise lcms)."""
    if a.n != b.n:
        raise InvalidInputError("intersect: ambient mismatch")
    if not a.gens or not b.gens:
        return MonomialIdeal(a.n)
    return MonomialIdeal(a.n, [lcm(g, h) for g in a.gens for h in b.gens])


def sum_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.n != b.n:
        raise InvalidInputError("sum: ambient mismatch")
    return MonomialIdeal(a.n, a.gens + b.gens)


def saturate_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """(I : x_{i+1}^infinity) for a monomial ideal: strip coordinate i."""
    return MonomialIdeal(
        ideal.n,
        [g[:i] + (0,) + g[i + 1:] for g in ideal.gens],
    )


def saturate_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Saturation with respect to the maximal ideal: intersect the per-variable ones."""
    if ideal.n == 0:
        return ideal
    parts = [saturate_variable(ideal, i) for i in range(ideal.n)]
    return reduce(intersect, parts)


def degree_masks(ideal: MonomialIdeal, dmax: int):
    """Bitmask of the degree-d monomials lying in the ideal, for d = 0..dmax."""
    n = ideal.n
    gens_by_degree = {}
    for g in ideal.gens:
        gens_by_degree.setdefault(sum(g), []).append(g)
    masks = []
    prev = 0
    for d in range(dmax + 1):
        mask = shadow_mask(n, d - 1, prev) if d > 0 else 0
        idx = degree_index(n, d)
        for g in gens_by_degree.get(d, ()):
            mask |= 1 << idx[g]
        masks.append(mask)
        prev = mask
    return masks


def masks_to_ideal(n: int, masks) -> MonomialIdeal:
    """Rebuild the ideal generated by the graded pieces given as bitmasks."""
    gens = []
    prev = 0
    for d, mask in enumerate(masks):
        new = mask & ~(shadow_mask(n, d - 1, prev) if d > 0 else 0)
        gens.extend(mask_to_monomials(n, d, new))
        prev = mask
    return MonomialIdeal(n, gens)


def standard_monomials(ideal: MonomialIdeal, d: int):
    """Degree-d monomials outside the ideal, descending lex."""
    if d < 0:
        raise InvalidInputError("degree must be nonnegative")
    mask = degree_masks(ideal, d)[d]
    monos = degree_monomials(ideal.n, d)
    return [m for i, m in enumerate(monos) if not mask >> i & 1]


def _hilbert_by_masks(ideal: MonomialIdeal, dmax: int):
    n = ideal.n
    return tuple(
        binom(d + n - 1, n - 1) - mask.bit_count()
        for d, mask in enumerate(degree_masks(ideal, dmax))
    )


def _face_counts_squarefree(ideal: MonomialIdeal):
    """Number of s-subsets of variables supporting no generator, for s = 0..n.

    Inclusion-exclusion over generator supports; only valid when every
    generator is squarefree.
    """
    n = ideal.n
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    counts = [0] * (n + 1)
    # iterate subsets of generators
    for t in range(1 << len(supports)):
        union = set()
        bits = 0
        tt = t
        k = 0
        while tt:
            if tt & 1:
                union |= supports[k]
                bits += 1
            tt >>= 1
            k += 1
        sign = -1 if bits & 1 else 1
        u = len(union)
        for s in range(u, n + 1):
            counts[s] += sign * binom(n - u, s - u)
    return counts


def _hilbert_squarefree(ideal: MonomialIdeal, dmax: int):
    faces = _face_counts_squarefree(ideal)
    values = [faces[0]]  # 1 unless the unit monomial generates
    for d in range(1, dmax + 1):
        values.append(sum(faces[s] * binom(d - 1, s - 1) for s in range(1, len(faces))))
    return tuple(values)


def hilbert_function(ideal: MonomialIdeal, dmax: int):
    """Hilbert function of A/I, degrees 0..dmax, as a tuple of dimensions.

    Monomial data is field independent.  Squarefree ideals take a face
    counting route that stays cheap in many variables; both routes agree.
    """
    if dmax < 0:
        raise InvalidInputError("dmax must be nonnegative")
    if ideal.gens and all(e <= 1 for g in ideal.gens for e in g):
        return _hilbert_squarefree(ideal, dmax)
    return _hilbert_by_masks(ideal, dmax)


def hilbert_upto(ideal: MonomialIdeal, upto: int):
    """Quotient Hilbert function to arbitrary degree, by inclusion-exclusion.

    Sums signed counts of multiples over lcms of generator subsets, pruning
    branches whose lcm degree already exceeds upto; stays cheap at high
    degrees where the bitmask route would not.
    """
    n = ideal.n
    gens = sorted(ideal.gens, key=sum, reverse=True)
    coef = {}

    def dfs(idx, cur, sign):
        if idx == len(gens):
            if cur is not None:
                d = sum(cur)
                coef[d] = coef.get(d, 0) + sign
            return
        dfs(idx + 1, cur, sign)
        if cur is None:
            nxt = gens[idx]
        else:
            nxt = lcm(cur, gens[idx])
        if sum(nxt) <= upto:
            dfs(idx + 1, nxt, -sign)

    dfs(0, None, -1)  # empty subset contributes nothing to the ideal count
    return tuple(
        binom(d + n - 1, n - 1)
        - sum(c * binom(d - l + n - 1, n - 1) for l, c in coef.items())
        for d in range(upto + 1)
    )


def series_transform(values, r: int):
    """Multiply a truncated series by (1-z)^r (r >= 0) or 1/(1-z)^|r| (r < 0)."""
    values = tuple(values)
    if r >= 0:
        return tuple(
            sum((-1) ** k * binom(r, k) * values[d - k] for k in range(0, min(r, d) + 1))
            for d in range(len(values))
        )
    out = list(values)
    for _ in range(-r):
        for d in range(1, len(out)):
            out[d] += out[d - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# last-variable slices and stability
# ---------------------------------------------------------------------------

def slice_last_variable(ideal: MonomialIdeal):
    """Slices J_[0], ..., J_[E] of the ideal along its last variable.

    J_[d] is the image of (I : x_n^d) under x_n -> 0, an ideal in n-1
    variables; slices stabilize once d reaches the largest x_n exponent E
    among the generators.
    """
    n = ideal.n
    if n < 1:
        raise InvalidInputError("need at least one variable to slice")
    top = max((g[-1] for g in ideal.gens), default=0)
    slices = []
    for d in range(top + 1):
        gens = [g[:-1] for g in ideal.gens if g[-1] <= d]
        slices.append(MonomialIdeal(n - 1, gens))
    return slices


def is_xn_stable(ideal: MonomialIdeal, e=math.inf) -> bool:
    """Whether the last-variable slice decomposition satisfies
    J_[k+1] * m_(n-1 vars) included in J_[k] for all 0 < k+1 < e.

    For finite e the ideal must contain x_n^e.
    """
    n = ideal.n
    if n < 1:
        raise InvalidInputError("need at least one variable")
    if e != math.inf:
        e = int(e)
        if e < 1:
            raise InvalidInputError("e must be positive")
        pure = tuple([0] * (n - 1) + [e])
        if not ideal.contains(pure):
            raise InvalidInputError(f"x_n^{e} must lie in the ideal for finite e")
    slices = slice_last_variable(ideal)
    top = len(slices) - 1
    last_k = top if e == math.inf else min(top, e - 2)
    for k in range(last_k + 1):
        upper = slices[min(k + 1, top)]
        lower = slices[k]
        for g in upper.gens:
            for i in range(n - 1):
                if not lower.contains(mul(g, variable(n - 1, i))):
                    return False
    return True


# ---------------------------------------------------------------------------
# text and JSON forms
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int):
    """Parse "x1^2*x3" (or "1") into an exponent tuple of length n."""
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text in ("1", ""):
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise InvalidInputError(f"bad monomial factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise InvalidInputError(f"variable x{i} out of range for n={n}")
        exps[i - 1] += int(m.group(2) or 1)
    return tuple(exps)


def format_monomial(m) -> str:
    parts = [
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
        for i, e in enumerate(m)
        if e
    ]
    return "*".join(parts) if parts else "1"
