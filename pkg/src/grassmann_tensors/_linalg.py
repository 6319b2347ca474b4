"""Small dense linear-algebra kernels: batched minors, elimination, null spaces."""

from __future__ import annotations

import numpy as np


def _det2(m):
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def _det3(m):
    return (
        m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
        - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
        + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0])
    )


def _det4(m):
    total = np.zeros(m.shape[:-2])
    rest = m[..., 1:, :]
    for j in range(4):
        cols = [c for c in range(4) if c != j]
        term = m[..., 0, j] * _det3(rest[..., cols])
        total = total - term if j % 2 else total + term
    return total


def batched_det(stack: np.ndarray) -> np.ndarray:
    """Determinants of a stack of square matrices, shape ``(..., m, m)``.

    Orders up to 4 use cofactor expansion, which is exact for integer-valued
    float inputs of moderate size; larger orders use LU with partial
    pivoting (LAPACK via numpy).
    """
    stack = np.asarray(stack, dtype=np.float64)
    m = stack.shape[-1]
    if m == 0:
        return np.ones(stack.shape[:-2])
    if m == 1:
        return stack[..., 0, 0].copy()
    if m == 2:
        return _det2(stack)
    if m == 3:
        return _det3(stack)
    if m == 4:
        return _det4(stack)
    return np.linalg.det(stack)


def rref(matrix, rtol: float = 1e-10) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form by Gauss-Jordan with partial pivoting.

    A column is skipped when its best remaining pivot is at most
    ``rtol * max|matrix|``. Returns the reduced matrix and pivot columns.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = a.shape
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    tol = rtol * scale
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[p, c]) <= tol:
            a[r:, c] = 0.0
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] /= a[r, c]
        for i in range(rows):
            if i != r and a[i, c] != 0.0:
                a[i] -= a[i, c] * a[r]
        a[r, c] = 1.0
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix, rtol: float = 1e-10) -> int:
    return len(rref(matrix, rtol)[1])


def null_space(matrix, rtol: float = 1e-10) -> np.ndarray:
    """Basis of ``{z : matrix @ z = 0}`` as columns (not orthonormalized)."""
    a, pivots = rref(matrix, rtol)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)))
    for j, f in enumerate(free):
        basis[f, j] = 1.0
        for i, p in enumerate(pivots):
            basis[p, j] = -a[i, f]
    return basis


def canonical_direction(v) -> np.ndarray:
    """Scale ``v`` to unit 2-norm with its first nonzero coordinate positive."""
    v = np.asarray(v, dtype=np.float64)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("zero vector has no direction")
    v = v / norm
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    if nz.size and v[nz[0]] < 0:
        v = -v
    return v + 0.0
