"""Graded Betti numbers and local cohomology Hilbert functions.

Betti numbers come from exact rank computations on the graded strands of
the Koszul complex tensored with the quotient (any homogeneous ideal); a
Taylor-complex route provides an independent oracle on monomial inputs.
Local cohomology of monomial quotients is computed multidegree-by-
multidegree through reduced simplicial homology of degree complexes,
aggregated to total degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import groebner, monomials
from ._modmat import rank_mod
from .errors import InvalidInputError
from .groebner import DEFAULT_CHAR, Ideal, Poly, check_characteristic
from .monomials import MonomialIdeal, binom, degree_masks, degree_monomials, mult_table


@dataclass(frozen=True)
class GradedBettiTable:
    """Graded Betti numbers of A/I; complete for j <= dmax, truncated above."""

    n: int
    dmax: int
    entries: tuple  # sorted ((i, j), value) pairs, zeros omitted
    p: int = DEFAULT_CHAR

    def __getitem__(self, key):
        return dict(self.entries).get(tuple(key), 0)

    def as_dict(self):
        return dict(self.entries)

    def max_i(self):
        return max((i for (i, _), _ in self.entries), default=0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dmax": self.dmax,
            "char": self.p,
            "truncated_above": self.dmax,
            "entries": {f"{i},{j}": v for (i, j), v in self.entries},
        }


def _table(n, dmax, raw, p):
    entries = tuple(sorted((k, v) for k, v in raw.items() if v))
    return GradedBettiTable(n=n, dmax=dmax, entries=entries, p=p)


# ---------------------------------------------------------------------------
# Koszul homology
# ---------------------------------------------------------------------------

def _koszul_from_action(n, dims, action, dmax, p):
    """Betti numbers from a basis-level multiplication action.

    dims[d] is the K-dimension of the quotient in degree d; action(d, b, k)
    returns the expansion of x_{k+1} * (b-th basis element of degree d) as a
    list of (basis index in degree d+1, coefficient).
    """
    subsets = [list(itertools.combinations(range(n), i)) for i in range(n + 2)]
    pos = [dict((s, t) for t, s in enumerate(level)) for level in subsets]
    ranks = {}
    for i in range(1, n + 1):
        for j in range(dmax + 1):
            dsrc = j - i
            if dsrc < 0 or dims[dsrc] == 0:
                ranks[i, j] = 0
                continue
            rows = len(subsets[i - 1]) * dims[dsrc + 1]
            cols = len(subsets[i]) * dims[dsrc]
            if rows == 0 or cols == 0:
                ranks[i, j] = 0
                continue
            m = np.zeros((rows, cols), dtype=np.int64)
            for s_idx, s in enumerate(subsets[i]):
                for b in range(dims[dsrc]):
                    col = s_idx * dims[dsrc] + b
                    for slot, k in enumerate(s):
                        t_idx = pos[i - 1][s[:slot] + s[slot + 1:]]
                        sign = -1 if slot & 1 else 1
                        for b2, c in action(dsrc, b, k):
                            m[t_idx * dims[dsrc + 1] + b2, col] += sign * c
            ranks[i, j] = rank_mod(m, p)
    raw = {}
    for i in range(n + 1):
        for j in range(dmax + 1):
            dsrc = j - i
            dim = len(subsets[i]) * dims[dsrc] if dsrc >= 0 else 0
            beta = dim - ranks.get((i, j), 0) - ranks.get((i + 1, j), 0)
            if beta:
                raw[i, j] = beta
    return raw


def _koszul_monomial(n, masks, dmax, p):
    """Fast path: quotient basis = standard monomials, action is 0/1."""
    std = []
    stdpos = []
    for d in range(dmax + 2):
        mask = masks[d] if d < len(masks) else 0
        monos = degree_monomials(n, d)
        keep = [k for k in range(len(monos)) if not mask >> k & 1]
        std.append(keep)
        stdpos.append({k: t for t, k in enumerate(keep)})
    dims = [len(s) for s in std]

    tables = [mult_table(n, d) for d in range(dmax + 1)]

    def action(d, b, k):
        target = tables[d][std[d][b]][k]
        t = stdpos[d + 1].get(target)
        return [] if t is None else [(t, 1)]

    return _koszul_from_action(n, dims, action, dmax, p)


def koszul_betti(ideal, dmax: int, p: int = DEFAULT_CHAR) -> GradedBettiTable:
    """beta_{ij}(A/I) for j <= dmax via Koszul strand ranks.

    Monomial ideals use standard monomials directly; general homogeneous
    ideals act through normal forms against a degrevlex basis.
    """
    if isinstance(ideal, MonomialIdeal):
        n = ideal.n
        masks = degree_masks(ideal, dmax + 1)
        return _table(n, dmax, _koszul_monomial(n, masks, dmax, p), p)
    if not isinstance(ideal, Ideal):
        raise InvalidInputError("expected MonomialIdeal or Ideal")
    n, p = ideal.n, ideal.p
    basis = ideal.groebner_basis()
    init = groebner.initial_ideal(ideal)
    masks = degree_masks(init, dmax + 1)
    std = []
    stdpos = []
    for d in range(dmax + 2):
        monos = degree_monomials(n, d)
        keep = [monos[k] for k in range(len(monos)) if not masks[d] >> k & 1]
        std.append(keep)
        stdpos.append({m: t for t, m in enumerate(keep)})
    dims = [len(s) for s in std]

    cache = {}

    def action(d, b, k):
        key = (d, b, k)
        if key not in cache:
            target = monomials.mul(std[d][b], monomials.variable(n, k))
            if target in stdpos[d + 1]:
                cache[key] = [(stdpos[d + 1][target], 1)]
            else:
                nf = groebner.normal_form(Poly.from_monomial(target, p), basis)
                cache[key] = [(stdpos[d + 1][e], c) for e, c in nf.terms.items()]
        return cache[key]

    return _table(n, dmax, _koszul_from_action(n, dims, action, dmax, p), p)


def taylor_betti_oracle(ideal: MonomialIdeal, dmax: int, p: int = DEFAULT_CHAR) -> GradedBettiTable:
    """Independent Betti oracle: homology of the Taylor complex tensored with K.

    Differential entries are +-1 exactly where dropping a generator keeps
    the lcm; exponential in the number of generators, intended for small
    inputs.
    """
    p = check_characteristic(p)
    gens = ideal.gens
    r = len(gens)
    lcm_of = {(): (0,) * ideal.n}
    levels = []
    for i in range(r + 1):
        level = []
        for s in itertools.combinations(range(r), i):
            if i:
                l = monomials.lcm(lcm_of[s[:-1]], gens[s[-1]])
                lcm_of[s] = l
            level.append(s)
        levels.append(level)
    ranks = {}
    for i in range(1, r + 1):
        degs_src = {}
        for s in levels[i]:
            degs_src.setdefault(sum(lcm_of[s]), []).append(s)
        degs_dst = {}
        for t in levels[i - 1]:
            bucket = degs_dst.setdefault(sum(lcm_of[t]), {})
            bucket[t] = len(bucket)
        for j, cols in degs_src.items():
            if j > dmax:
                continue
            rows = degs_dst.get(j, {})
            m = np.zeros((max(len(rows), 1), len(cols)), dtype=np.int64)
            for c_idx, s in enumerate(cols):
                for slot in range(i):
                    t = s[:slot] + s[slot + 1:]
                    if lcm_of[t] == lcm_of[s]:
                        m[rows[t], c_idx] += -1 if slot & 1 else 1
            ranks[i, j] = rank_mod(m, p)
    raw = {}
    for i in range(r + 1):
        for s in levels[i]:
            j = sum(lcm_of[s])
            if j <= dmax:
                raw[i, j] = raw.get((i, j), 0) + 1
    for (i, j), rk in ranks.items():
        if rk:
            raw[i, j] = raw.get((i, j), 0) - rk
            raw[i - 1, j] = raw.get((i - 1, j), 0) - rk
    return _table(ideal.n, dmax, raw, p)


# ---------------------------------------------------------------------------
# simplicial complexes and local cohomology
# ---------------------------------------------------------------------------

class SimplicialComplex:
    """Finite simplicial complex given by its facets (maximal faces)."""

    __slots__ = ("vertices", "facets", "_faces")

    def __init__(self, vertices: int, facets):
        self.vertices = int(vertices)
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if any(not 0 <= v < self.vertices for v in f):
                raise InvalidInputError("facet vertex out of range")
        self.facets = tuple(sorted(
            (f for f in fs if not any(f < g for g in fs)),
            key=lambda f: (len(f), sorted(f)),
        ))
        self._faces = None

    @classmethod
    def from_faces(cls, vertices: int, faces):
        faces = set(map(frozenset, faces))
        maximal = [f for f in faces if not any(f < g for g in faces)]
        return cls(vertices, maximal)

    @property
    def is_void(self) -> bool:
        """No faces at all, not even the empty face."""
        return not self.facets

    def faces(self):
        if self._faces is None:
            out = set()
            for f in self.facets:
                verts = sorted(f)
                for k in range(len(verts) + 1):
                    out.update(map(frozenset, itertools.combinations(verts, k)))
            self._faces = out
        return self._faces

    def faces_of_dim(self, d: int):
        return sorted((f for f in self.faces() if len(f) == d + 1),
                      key=lambda f: sorted(f))


def simplicial_reduced_homology(complex_: SimplicialComplex, i: int, p: int = DEFAULT_CHAR) -> int:
    """dim of the i-th reduced homology over F_p (boundary-matrix ranks)."""
    p = check_characteristic(p)
    if complex_.is_void:
        return 0

    def boundary_rank(d):
        # rank of the boundary map C_d -> C_{d-1}
        src = complex_.faces_of_dim(d)
        dst = complex_.faces_of_dim(d - 1)
        if not src or not dst:
            return 0
        pos = {f: k for k, f in enumerate(dst)}
        m = np.zeros((len(dst), len(src)), dtype=np.int64)
        for c, f in enumerate(src):
            verts = sorted(f)
            for slot in range(len(verts)):
                sub = frozenset(verts[:slot] + verts[slot + 1:])
                m[pos[sub], c] += -1 if slot & 1 else 1
        return rank_mod(m, p)

    dim_ci = len(complex_.faces_of_dim(i))
    if dim_ci == 0:
        return 0
    return dim_ci - boundary_rank(i) - boundary_rank(i + 1)


@dataclass(frozen=True)
class LocalCohTable:
    """Hilbert functions of local cohomology modules over a degree window.

    entries maps (i, j) to dim H^i_m(A/I)_j for i in i_range and j in the
    window.  Rows listed in unbounded_below have nonzero values for every
    sufficiently negative degree, so any finite window truncates them;
    support_above is the largest degree with a possibly nonzero value.
    """

    i_range: tuple
    window: tuple
    entries: tuple
    unbounded_below: tuple
    support_above: int
    window_truncated: bool
    p: int = DEFAULT_CHAR

    def __getitem__(self, key):
        return dict(self.entries).get(tuple(key), 0)

    def as_dict(self):
        return dict(self.entries)

    def row(self, i: int):
        jmin, jmax = self.window
        return tuple(self[i, j] for j in range(jmin, jmax + 1))

    def to_json(self) -> dict:
        return {
            "i_range": list(self.i_range),
            "window": list(self.window),
            "char": self.p,
            "unbounded_below": list(self.unbounded_below),
            "support_above": self.support_above,
            "window_truncated": self.window_truncated,
            "entries": {f"{i},{j}": v for (i, j), v in self.entries},
        }


def _degree_complex(gens, region, box_values, group):
    """Faces F of the degree complex: no generator fits below the bound.

    region lists the non-negative coordinates (their values in box_values);
    group is the set of strictly negative coordinates.  A subset F of
    region is a face iff no generator g satisfies g_i <= b_i for all i in
    region \\ F (coordinates in F or group count as unbounded).
    """
    faces = []
    for k in range(len(region) + 1):
        for fidx in itertools.combinations(range(len(region)), k):
            chosen = set(fidx)
            covered = any(
                all(g[region[t]] <= box_values[t] for t in range(len(region)) if t not in chosen)
                for g in gens
            )
            if not covered:
                faces.append(frozenset(fidx))
    return faces


def local_coh_monomial(ideal: MonomialIdeal, i_range=None, window=None,
                       p: int = DEFAULT_CHAR) -> LocalCohTable:
    """Hilbert functions of H^i_m(A/I) for a monomial ideal I.

    Works through reduced homology of degree complexes: a multidegree
    contributes through the pattern of its negative coordinates and its
    bounded non-negative coordinates, so each total degree in the window is
    a finite weighted sum of pattern homology dimensions.
    """
    p = check_characteristic(p)
    n = ideal.n
    if i_range is None:
        i_range = tuple(range(n + 1))
    else:
        i_range = tuple(i_range)
    gens = ideal.gens
    exp_bound = [max((g[i] for g in gens), default=0) for i in range(n)]
    if window is None:
        spread = sum(sum(g) for g in gens)
        window = (-spread, spread)
    jmin, jmax = window
    if jmin > jmax:
        raise InvalidInputError("empty degree window")

    # pattern -> homology dims; pattern = (negative-coordinate set, box values)
    patterns = []
    for gbits in range(1 << n):
        group = [i for i in range(n) if gbits >> i & 1]
        region = [i for i in range(n) if not gbits >> i & 1]
        ranges = [range(exp_bound[i]) for i in region]
        for box in itertools.product(*ranges):
            faces = _degree_complex(gens, region, box, group)
            if not faces:
                continue
            cx = SimplicialComplex.from_faces(len(region), faces)
            dims = {}
            for k in range(-1, len(region)):
                h = simplicial_reduced_homology(cx, k, p)
                if h:
                    dims[k + len(group) + 1] = h
            if dims:
                patterns.append((len(group), sum(box), dims))

    entries = {}
    unbounded = set()
    support_above = None
    for glen, bsum, dims in patterns:
        top = bsum if glen == 0 else bsum - glen
        support_above = top if support_above is None else max(support_above, top)
        for i, h in dims.items():
            if i not in i_range:
                continue
            if glen:
                unbounded.add(i)
            for j in range(jmin, jmax + 1):
                t = j - bsum
                if glen == 0:
                    count = 1 if t == 0 else 0
                else:
                    count = binom(-t - 1, glen - 1) if t <= -glen else 0
                if count:
                    entries[i, j] = entries.get((i, j), 0) + h * count
    support_above = jmin - 1 if support_above is None else support_above
    truncated = bool(unbounded) or support_above > jmax
    return LocalCohTable(
        i_range=i_range,
        window=window,
        entries=tuple(sorted(entries.items())),
        unbounded_below=tuple(sorted(unbounded)),
        support_above=support_above,
        window_truncated=truncated,
        p=p,
    )
