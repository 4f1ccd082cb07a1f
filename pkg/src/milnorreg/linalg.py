"""Exact linear algebra over GF(p) and Q.

GF(p) matrices use int64 numpy arrays (p < 2^31 so products fit).  The
elimination only touches rows with a nonzero entry in the pivot column and
columns where the pivot row is nonzero, so banded matrices (as produced by
multiplication maps between graded pieces) stay cheap.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

MAX_NUMPY_PRIME = 1 << 31


def _as_array(rows, p):
    a = np.array(rows, dtype=object) if not isinstance(rows, np.ndarray) else rows
    if a.size == 0:
        return np.zeros(a.shape if a.ndim == 2 else (0, 0), dtype=np.int64)
    return np.asarray(a % p, dtype=np.int64)


def echelon_mod_p(A, p):
    """Row echelon form (pivot rows normalised to 1) and pivot columns.

    Returns ``(E, pivots)``; ``E`` is a new array.
    """
    if p >= MAX_NUMPY_PRIME:
        raise ValueError("prime too large for int64 elimination")
    A = np.array(A, dtype=np.int64, copy=True) % p
    m, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            A[[row, pr]] = A[[pr, row]]
        cidx = col + np.flatnonzero(A[row, col:])
        inv = pow(int(A[row, col]), -1, p)
        if inv != 1:
            A[row, cidx] = A[row, cidx] * inv % p
        below = row + 1 + np.flatnonzero(A[row + 1:, col])
        if below.size:
            f = A[below, col]
            block = A[np.ix_(below, cidx)]
            A[np.ix_(below, cidx)] = (block - f[:, None] * A[row, cidx][None, :]) % p
        pivots.append(col)
        row += 1
    return A, pivots


def rank_mod_p(A, p) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(echelon_mod_p(A, p)[1])


def nullspace_mod_p(A, p, limit=None):
    """Basis of ``{x : A x = 0}`` over GF(p) as a list of int64 vectors."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    if m == 0:
        return [np.eye(n, dtype=np.int64)[i] for i in range(n)][:limit]
    E, pivots = echelon_mod_p(A, p)
    r = len(pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    if limit is not None:
        free = free[:limit]
    basis = []
    for fcol in free:
        x = np.zeros(n, dtype=np.int64)
        x[fcol] = 1
        for i in range(r - 1, -1, -1):
            pc = pivots[i]
            s = int(E[i, pc + 1:] @ x[pc + 1:]) % p
            x[pc] = (-s) % p
        basis.append(x)
    return basis


# -- generic field path (exact, pure Python) --------------------------------


def rank_field(rows, field) -> int:
    """Rank of a matrix (list of rows) over ``field`` (a FieldSpec)."""
    p = field.characteristic
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if p and p < MAX_NUMPY_PRIME:
        return rank_mod_p(np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64), p)
    return len(_echelon_generic(rows, field)[1])


def _echelon_generic(rows, field):
    p = field.characteristic
    conv = (lambda x: x % p) if p else Fraction
    A = [[conv(x) for x in r] for r in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    pivots = []
    row = 0
    for col in range(n):
        pr = next((i for i in range(row, m) if A[i][col]), None)
        if pr is None:
            continue
        A[row], A[pr] = A[pr], A[row]
        inv = field.inv(A[row][col]) if p else 1 / A[row][col]
        A[row] = [conv(x * inv) for x in A[row]]
        for i in range(m):
            if i != row and A[i][col]:
                f = A[i][col]
                A[i] = [conv(x - f * y) for x, y in zip(A[i], A[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return A, pivots


def nullspace_field(rows, field, ncols=None):
    """Kernel basis over any supported field (list of coefficient lists)."""
    p = field.characteristic
    if p and p < MAX_NUMPY_PRIME:
        if not rows:
            return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
        arr = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
        return [[int(v) for v in x] for x in nullspace_mod_p(arr, p)]
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    A, pivots = _echelon_generic(rows, field)
    n = len(A[0])
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for fcol in free:
        x = [0] * n
        x[fcol] = 1
        for i, pc in enumerate(pivots):
            x[pc] = -A[i][fcol]
        out.append([field(v) for v in x])
    return out


def det_poly(matrix):
    """Determinant of a square matrix of polynomials (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    M = [list(r) for r in matrix]
    ring = M[0][0].ring
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return ring.zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).divexact(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d
