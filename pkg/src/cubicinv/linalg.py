"""Exact Gaussian elimination over F_p on numpy integer matrices.

Matrices are int16/int64 arrays with entries in [0, p).  Pivoting always
selects the first nonzero entry in the current column, so for a fixed
input the reduced forms are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np


def _normalize(mat, p):
    a = np.asarray(mat)
    if a.dtype != np.int64:
        a = a.astype(np.int64)
    return np.mod(a, p)


def row_echelon(mat, p: int):
    """In-place forward elimination; returns (matrix, pivot column list)."""
    a = _normalize(mat, p)
    m, n = a.shape
    pivots = []
    r = 0
    for col in range(n):
        if r >= m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), -1, p)
        a[r] = (a[r] * inv) % p
        rows = np.nonzero(a[r + 1:, col])[0] + r + 1
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, col], a[r])) % p
        pivots.append(col)
        r += 1
    return a, pivots


def rank(mat, p: int) -> int:
    _, pivots = row_echelon(mat, p)
    return len(pivots)


def rref(mat, p: int):
    """Reduced row echelon form (pivot entries 1, zeros above pivots)."""
    a, pivots = row_echelon(mat, p)
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        rows = np.nonzero(a[:r, col])[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, col], a[r])) % p
    return a[: len(pivots)], pivots


def nullspace(mat, p: int):
    """Basis of the right null space as an (n, k) array over F_p."""
    a, pivots = rref(mat, p)
    n = mat.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-int(a[r, fc])) % p
    return basis


def row_space_basis(mat, p: int):
    """Canonical (RREF) basis of the row space."""
    a, pivots = rref(mat, p)
    return a


def in_row_space(vec, basis_rref, pivots, p: int) -> bool:
    """Membership test against a precomputed RREF basis."""
    v = _normalize(vec, p).copy()
    for r, col in enumerate(pivots):
        if v[col]:
            v = (v - v[col] * basis_rref[r]) % p
    return not v.any()
