"""Antisymmetrization, Grassmann tensors and wedge products.

The antisymmetrizer is unnormalized: ``L(T) = sum_s sgn(s) s(T)`` with no
``1/m!``, so ``a ^ b = a b^T - b a^T``.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from ._linalg import batched_det
from .errors import ArgumentError, DimensionError, ValidationError
from .tensor import (
    ModeAssignment,
    as_tensor,
    check_entries,
    check_factorial_order,
    cubical_dim,
    increasing_subsets,
    outer_product,
)


def generalized_sign(sigma: Sequence[int]) -> int:
    """Parity of ``sigma`` read as a permutation; 0 if an index repeats.

    Only the relative order of the entries matters, so both 0- and 1-based
    multi-indices work.

    >>> generalized_sign((2, 1, 3)), generalized_sign((1, 1, 2))
    (-1, 0)
    """
    sigma = tuple(sigma)
    if len(set(sigma)) != len(sigma):
        return 0
    inversions = sum(
        1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j]
    )
    return -1 if inversions % 2 else 1


def _signed_permutations(m: int) -> list[tuple[tuple[int, ...], int]]:
    return [(p, generalized_sign(p)) for p in permutations(range(m))]


class AntisymTensor:
    """Antisymmetric tensor in T_{m;n} stored by its Plücker coordinates.

    ``coords`` maps every strictly increasing 0-based m-tuple over
    ``range(n)`` to its value, in lexicographic order. Any other entry is
    recovered by sorting the index and applying the permutation sign.
    """

    __slots__ = ("order", "dim", "_coords", "_generators")

    def __init__(
        self,
        order: int,
        dim: int,
        coords: Mapping[tuple[int, ...], float] | None = None,
        generators: np.ndarray | None = None,
    ):
        if order < 0 or dim < 0:
            raise ArgumentError("order and dim must be non-negative")
        if order > dim:
            raise ArgumentError(f"order {order} exceeds dimension {dim}")
        self.order = order
        self.dim = dim
        full = {key: 0.0 for key in combinations(range(dim), order)}
        for key, value in (coords or {}).items():
            key = tuple(int(i) for i in key)
            if key not in full:
                raise ArgumentError(f"{key} is not a strictly increasing index over [0, {dim})")
            full[key] = float(value)
        self._coords = MappingProxyType(full)
        if generators is not None:
            generators = np.array(generators, dtype=np.float64)
            generators.flags.writeable = False
        self._generators = generators

    @property
    def coords(self) -> Mapping[tuple[int, ...], float]:
        return self._coords

    @property
    def generators(self) -> np.ndarray | None:
        """The n x m matrix of generating vectors, if built from a family."""
        return self._generators

    def flat(self) -> np.ndarray:
        """Coordinates as a vector, in lexicographic index order."""
        return np.fromiter(self._coords.values(), dtype=np.float64, count=len(self._coords))

    def __getitem__(self, sigma) -> float:
        sigma = tuple(int(i) for i in sigma)
        if len(sigma) != self.order:
            raise DimensionError(f"index {sigma} has wrong length for order {self.order}")
        if any(i < 0 or i >= self.dim for i in sigma):
            raise IndexError(f"index {sigma} out of range for dimension {self.dim}")
        s = generalized_sign(sigma)
        if s == 0:
            return 0.0
        return s * self._coords[tuple(sorted(sigma))]

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(v) <= tol for v in self._coords.values())

    def norm(self) -> float:
        return float(np.linalg.norm(self.flat()))

    def to_dense(self) -> np.ndarray:
        m, n = self.order, self.dim
        check_entries((n,) * m)
        if m == 0:
            return np.asarray(self._coords[()], dtype=np.float64)
        check_factorial_order(m)
        dense = np.zeros((n,) * m)
        keys = np.array(list(self._coords.keys()), dtype=np.intp).reshape(-1, m)
        values = self.flat()
        for perm, sign in _signed_permutations(m):
            idx = keys[:, perm]
            dense[tuple(idx.T)] = sign * values
        return dense

    @classmethod
    def from_dense(cls, t, tol: float = 1e-9) -> "AntisymTensor":
        """Compress a dense antisymmetric tensor.

        Raises :class:`ValidationError` naming the first index pair where
        ``|T[s] + T[swap(s)]| > tol * max|T|``.
        """
        t = as_tensor(t)
        n = cubical_dim(t)
        m = t.ndim
        if m == 0:
            return cls(0, 0, {(): float(t)})
        scale = float(np.max(np.abs(t))) if t.size else 0.0
        for k in range(m - 1):
            bad = np.abs(t + np.swapaxes(t, k, k + 1)) > tol * scale
            if bad.any():
                first = tuple(int(i) for i in np.argwhere(bad)[0])
                other = list(first)
                other[k], other[k + 1] = other[k + 1], other[k]
                raise ValidationError(
                    "tensor is not antisymmetric: entries "
                    f"{tuple(i + 1 for i in first)} and {tuple(i + 1 for i in other)} "
                    "(1-based) do not negate each other"
                )
        coords = {key: float(t[key]) for key in combinations(range(n), m)}
        return cls(m, n, coords)

    def __eq__(self, other):
        if not isinstance(other, AntisymTensor):
            return NotImplemented
        return (self.order, self.dim, dict(self._coords)) == (
            other.order,
            other.dim,
            dict(other._coords),
        )

    def __repr__(self):
        return f"AntisymTensor(order={self.order}, dim={self.dim}, coords={dict(self._coords)})"


def as_dense(t) -> np.ndarray:
    if isinstance(t, AntisymTensor):
        return t.to_dense()
    return as_tensor(t)


def antisymmetrize(t) -> np.ndarray:
    """``L(T) = sum over index permutations s of sgn(s) * s(T)`` (unnormalized)."""
    t = as_tensor(t)
    cubical_dim(t)
    m = t.ndim
    check_factorial_order(m)
    result = np.zeros_like(t)
    for perm, sign in _signed_permutations(m):
        result += sign * np.transpose(t, perm)
    return result


def grassmann_from_columns(a) -> AntisymTensor:
    """Grassmann tensor of the columns of the n x m matrix ``a``.

    The coordinate at rows ``s`` is ``det a[s, :]``.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise DimensionError("expected an n x m matrix of column vectors")
    n, m = a.shape
    if m > n:
        raise ArgumentError(f"cannot wedge {m} vectors in dimension {n}")
    keys = list(combinations(range(n), m))
    if m == 0:
        return AntisymTensor(0, n, {(): 1.0}, generators=a)
    rows = np.array(keys, dtype=np.intp)
    dets = batched_det(a[rows])
    return AntisymTensor(m, n, dict(zip(keys, dets.tolist())), generators=a)


def grassmann_from_vectors(*vectors) -> AntisymTensor:
    """``v_1 ^ v_2 ^ ... ^ v_m`` in compact form.

    >>> grassmann_from_vectors([1, 2], [3, 4]).to_dense().tolist()
    [[0.0, -2.0], [2.0, 0.0]]
    """
    if not vectors:
        return AntisymTensor(0, 0, {(): 1.0})
    vs = [np.asarray(v, dtype=np.float64) for v in vectors]
    if any(v.ndim != 1 for v in vs) or len({v.shape[0] for v in vs}) != 1:
        raise DimensionError("all vectors must be 1-D with the same length")
    return grassmann_from_columns(np.column_stack(vs))


def sign_tensor(n: int) -> AntisymTensor:
    """The generalized-sign tensor H in T_{n;n} (``e_1 ^ ... ^ e_n``)."""
    return grassmann_from_columns(np.eye(n))


def wedge_vec(a, b) -> np.ndarray:
    """``A ^ b`` for a cubical order-m tensor and a vector.

    The sum runs over the position k of ``b`` among the m+1 modes, with sign
    ``(-1)**(m + 1 - k)``, so that appending ``b`` last is positive and
    ``(v_1 ^ ... ^ v_m) ^ b == v_1 ^ ... ^ v_m ^ b`` for every m.
    """
    a = as_dense(a)
    b = np.asarray(b, dtype=np.float64)
    n = cubical_dim(a)
    m = a.ndim
    if b.ndim != 1 or (m and b.shape[0] != n):
        raise DimensionError(f"vector of shape {b.shape} does not match dimension {n}")
    check_factorial_order(m + 1)
    check_entries((b.shape[0],) * (m + 1))
    result = None
    for k in range(1, m + 2):
        theta = ModeAssignment(tuple(j for j in range(1, m + 2) if j != k), m + 1)
        term = outer_product(a, b, theta)
        if (m + 1 - k) % 2:
            term = -term
        result = term if result is None else result + term
    return result


def wedge(a, b) -> np.ndarray:
    """``A ^ B = sum over increasing theta of sgn(theta) * (A x_theta B)``.

    ``sgn(theta)`` is the parity of the permutation ``(theta, theta^c)``.
    """
    a = as_dense(a)
    b = as_dense(b)
    na, nb = cubical_dim(a), cubical_dim(b)
    if a.ndim and b.ndim and na != nb:
        raise DimensionError(f"dimensions {na} and {nb} differ")
    p, q = a.ndim, b.ndim
    check_factorial_order(p + q)
    check_entries((max(na, nb),) * (p + q))
    result = None
    for assign in increasing_subsets(p, p + q):
        term = outer_product(a, b, assign)
        if assign.sign < 0:
            term = -term
        result = term if result is None else result + term
    return result


def commutation_tensor(n: int) -> np.ndarray:
    """K_n = I_n x_(1,3) I_n, the identity map on n x n matrices."""
    eye = np.eye(n)
    return outer_product(eye, eye, theta=(1, 3))


def identity_wedge(n: int) -> np.ndarray:
    """I_n ^ I_n computed with :func:`wedge`."""
    eye = np.eye(n)
    return wedge(eye, eye)


def nonzero_count(t, tol: float = 0.0) -> int:
    return int(np.count_nonzero(np.abs(as_dense(t)) > tol))


def max_nonzero_entries(n: int, m: int) -> int:
    """Upper bound n!/(n-m)! on the nonzero entries of an m-vector in R^n."""
    return math.perm(n, m)
