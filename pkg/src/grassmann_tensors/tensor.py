"""Dense tensors and the basic tensor multiplications.

Dense tensors are plain :class:`numpy.ndarray` objects of dtype float64,
stored in the canonical row-major layout. Entry indices are 0-based (as for
any ndarray). Mode numbers (``theta`` in an outer product, ``k`` in a mode
contraction) are 1-based, following the usual mathematical notation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ArgumentError, DimensionError, ResourceError


@dataclass
class Limits:
    """Size guards applied before any tensor is allocated."""

    max_entries: int = 10**8
    max_factorial_order: int = 10


LIMITS = Limits()


def check_entries(shape: Sequence[int]) -> None:
    count = math.prod(int(s) for s in shape)
    if count > LIMITS.max_entries:
        raise ResourceError(
            f"tensor of shape {tuple(shape)} has {count} entries, "
            f"limit is {LIMITS.max_entries}"
        )


def check_factorial_order(m: int) -> None:
    if m > LIMITS.max_factorial_order:
        raise ResourceError(
            f"order {m} exceeds the factorial-algorithm limit "
            f"{LIMITS.max_factorial_order}"
        )


def as_tensor(a) -> np.ndarray:
    """Convert ``a`` to a float64 ndarray (no copy if already one)."""
    arr = np.asarray(a, dtype=np.float64)
    check_entries(arr.shape)
    return arr


def cubical_dim(a: np.ndarray) -> int:
    """Return n for a tensor in T_{m;n}; raise if the modes differ."""
    if a.ndim == 0:
        return 0
    n = a.shape[0]
    if any(s != n for s in a.shape):
        raise DimensionError(f"tensor of shape {a.shape} is not cubical")
    return n


@dataclass(frozen=True)
class ModeAssignment:
    """An increasing subset ``theta`` of the modes ``1..m`` and its complement.

    In ``outer_product(A, B, assign)`` the modes listed in ``theta`` are fed
    by ``A`` and those in ``theta_c`` by ``B``.
    """

    theta: tuple[int, ...]
    m: int

    def __post_init__(self):
        theta = tuple(int(t) for t in self.theta)
        object.__setattr__(self, "theta", theta)
        if self.m < 0:
            raise ArgumentError("total order must be non-negative")
        if any(b <= a for a, b in zip(theta, theta[1:])):
            raise ArgumentError(f"theta {theta} is not strictly increasing")
        if theta and (theta[0] < 1 or theta[-1] > self.m):
            raise ArgumentError(f"theta {theta} is not a subset of [1..{self.m}]")

    @property
    def theta_c(self) -> tuple[int, ...]:
        chosen = set(self.theta)
        return tuple(k for k in range(1, self.m + 1) if k not in chosen)

    @property
    def sign(self) -> int:
        """Parity of the permutation ``(theta, theta_c)`` of ``1..m``."""
        # each pair (t in theta, c in theta_c) with t > c is one inversion
        inversions = sum(1 for t in self.theta for c in self.theta_c if t > c)
        return -1 if inversions % 2 else 1


def increasing_subsets(p: int, m: int) -> Iterator[ModeAssignment]:
    """Enumerate Q_{p,m}: all increasing p-subsets of ``1..m`` in lex order."""
    for theta in combinations(range(1, m + 1), p):
        yield ModeAssignment(theta, m)


def outer_product(a, b, theta: ModeAssignment | Iterable[int] | None = None) -> np.ndarray:
    """Outer product of ``a`` (order p) and ``b`` (order q) along ``theta``.

    The result ``C`` has order ``p + q`` and
    ``C[s] = a[s at theta] * b[s at theta_c]``. With ``theta=None`` the
    modes of ``a`` come first, which is the plain outer product.

    >>> outer_product([1, 2], [3, 4], theta=[2]).tolist()
    [[3.0, 6.0], [4.0, 8.0]]
    """
    a = as_tensor(a)
    b = as_tensor(b)
    p, q = a.ndim, b.ndim
    if theta is None:
        assign = ModeAssignment(tuple(range(1, p + 1)), p + q)
    elif isinstance(theta, ModeAssignment):
        assign = theta
    else:
        assign = ModeAssignment(tuple(theta), p + q)
    if assign.m != p + q or len(assign.theta) != p:
        raise DimensionError(
            f"assignment {assign.theta} of {assign.m} modes does not fit "
            f"orders {p} and {q}"
        )
    check_entries(a.shape + b.shape)
    c = np.multiply.outer(a, b)
    dst = [t - 1 for t in assign.theta] + [t - 1 for t in assign.theta_c]
    return np.ascontiguousarray(np.moveaxis(c, list(range(p + q)), dst))


def outer(*factors) -> np.ndarray:
    """Plain outer product ``f1 x f2 x ... x fk`` (associative)."""
    result = np.asarray(1.0)
    for f in factors:
        result = outer_product(result, f)
    return result


def rank_one_power(x, m: int) -> np.ndarray:
    """The symmetric rank-one tensor ``x^m``."""
    return outer(*([x] * m))


def poly_eval(a, x) -> float:
    """Evaluate the homogeneous polynomial ``A x^m`` of a cubical tensor."""
    a = as_tensor(a)
    x = np.asarray(x, dtype=np.float64)
    n = cubical_dim(a)
    if a.ndim and (x.ndim != 1 or x.shape[0] != n):
        raise DimensionError(f"vector of shape {x.shape} does not match dimension {n}")
    result = a
    for _ in range(a.ndim):
        result = result @ x
    return float(result)


def paired_power(a, k: int) -> np.ndarray:
    """The order-2k tensor with entries ``prod_s A[i_s, j_s]``.

    Modes are laid out as ``(i_1, ..., i_k, j_1, ..., j_k)``.
    """
    a = as_tensor(a)
    if a.ndim != 2:
        raise DimensionError("paired_power expects a matrix")
    if k < 1:
        raise ArgumentError("k must be a positive integer")
    check_entries(a.shape * k)
    result = a
    for _ in range(k - 1):
        result = np.multiply.outer(result, a)
    # axes are (i1, j1, i2, j2, ...); gather the i's then the j's
    perm = list(range(0, 2 * k, 2)) + list(range(1, 2 * k, 2))
    return np.ascontiguousarray(result.transpose(perm))


def contract_paired(a, b) -> np.ndarray:
    """``(A B)[i] = sum_j A[i; j] B[j]``, contracting the trailing modes of ``A``."""
    a = as_tensor(a)
    b = as_tensor(b)
    k = b.ndim
    if a.ndim != 2 * k or a.shape[k:] != b.shape:
        raise DimensionError(f"cannot contract shape {a.shape} with {b.shape}")
    return np.tensordot(a, b, axes=k)


def contract_paired_left(b, a) -> np.ndarray:
    """``(B A)[j] = sum_i B[i] A[i; j]``, contracting the leading modes of ``A``."""
    a = as_tensor(a)
    b = as_tensor(b)
    k = b.ndim
    if a.ndim != 2 * k or a.shape[:k] != b.shape:
        raise DimensionError(f"cannot contract shape {b.shape} with {a.shape}")
    return np.tensordot(b, a, axes=k)


def contract_mode(a, b, k: int) -> np.ndarray:
    """Contract mode ``k`` (1-based) of ``a`` against the rows of ``b``.

    The surviving modes of ``a`` keep their order and the column mode of
    ``b`` is appended last, so for matrices ``contract_mode(A, B, 2) == A @ B``
    and ``contract_mode(A, B, 1) == A.T @ B``. A 1-D ``b`` is a plain vector
    and the contracted mode disappears.
    """
    a = as_tensor(a)
    b = as_tensor(b)
    if not 1 <= k <= a.ndim:
        raise ArgumentError(f"mode {k} out of range for order {a.ndim}")
    if b.ndim not in (1, 2) or b.shape[0] != a.shape[k - 1]:
        raise DimensionError(
            f"mode {k} of shape {a.shape} does not match operand of shape {b.shape}"
        )
    return np.tensordot(a, b, axes=([k - 1], [0]))


def is_symmetric(a, tol: float = 1e-12) -> bool:
    """True when ``A`` is invariant under every permutation of its indices.

    Adjacent transpositions generate the symmetric group, so only those are
    checked. ``tol`` is relative to the largest absolute entry.
    """
    a = as_tensor(a)
    cubical_dim(a)
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    for k in range(a.ndim - 1):
        if np.max(np.abs(a - np.swapaxes(a, k, k + 1)), initial=0.0) > tol * scale:
            return False
    return True


def subtensor(a, kappa: Sequence[Iterable[int]]) -> np.ndarray:
    """Subtensor with mode-k indices restricted to ``kappa[k]`` (0-based)."""
    a = as_tensor(a)
    if len(kappa) != a.ndim:
        raise DimensionError(f"need {a.ndim} index sets, got {len(kappa)}")
    sets = []
    for k, part in enumerate(kappa):
        idx = [int(i) for i in part]
        if not idx:
            raise ArgumentError(f"index set for mode {k + 1} is empty")
        if min(idx) < 0 or max(idx) >= a.shape[k]:
            raise ArgumentError(f"index set {idx} out of range for mode {k + 1}")
        sets.append(idx)
    return a[np.ix_(*sets)]


def principal_subtensor(a, s: Iterable[int]) -> np.ndarray:
    a = as_tensor(a)
    s = list(s)
    return subtensor(a, [s] * a.ndim)
