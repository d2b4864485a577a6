"""Dense exact linear algebra over a prime field, on int64 numpy arrays."""

from __future__ import annotations

import numpy as np


def rank_mod(matrix, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination.

    Entries may be arbitrary ints; they are reduced mod p.  Row updates keep
    every intermediate product below p**2, which fits in int64 for p < 2**31.
    """
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot = None
        for r in range(rank, rows):
            if a[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        col = a[rank + 1:, c]
        nz = np.nonzero(col)[0]
        if nz.size:
            a[rank + 1 + nz] = (a[rank + 1 + nz] - np.outer(col[nz], a[rank])) % p
        rank += 1
    return rank


def nullity_mod(matrix, p: int) -> int:
    a = np.asarray(matrix)
    return (a.shape[1] if a.size else 0) - rank_mod(a, p)


def invert_mod(matrix, p: int):
    """Inverse of a square matrix over F_p, or None if singular."""
    a = np.array(matrix, dtype=np.int64) % p
    n = a.shape[0]
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    row = 0
    for c in range(n):
        pivot = None
        for r in range(row, n):
            if aug[r, c]:
                pivot = r
                break
        if pivot is None:
            return None
        if pivot != row:
            aug[[row, pivot]] = aug[[pivot, row]]
        inv = pow(int(aug[row, c]), p - 2, p)
        aug[row] = aug[row] * inv % p
        for r in range(n):
            if r != row and aug[r, c]:
                aug[r] = (aug[r] - aug[r, c] * aug[row]) % p
        row += 1
    return aug[:, n:]
