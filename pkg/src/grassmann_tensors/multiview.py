"""Projective-geometry applications of Grassmann tensors.

Points and planes of P^3 are homogeneous 4-vectors. Returned homogeneous
points are scaled to unit 2-norm with the first nonzero coordinate positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _linalg
from .errors import ArgumentError, DegenerateConfigurationError, DimensionError
from .grassmann import AntisymTensor, as_dense, grassmann_from_columns, wedge_vec
from .tensor import contract_mode

RANK_RTOL = 1e-10


def _vector(v, name: str, dim: int | None = None) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1 or (dim is not None and v.shape[0] != dim):
        want = f"length {dim}" if dim is not None else "1-D"
        raise DimensionError(f"{name} must be a {want} vector, got shape {v.shape}")
    return v


@dataclass(frozen=True)
class PlueckerMatrix:
    """Antisymmetric matrix ``X Y^T - Y X^T`` of the line through X and Y."""

    matrix: np.ndarray
    generators: tuple[np.ndarray, np.ndarray] | None = field(default=None, compare=False)

    def __post_init__(self):
        p = np.array(self.matrix, dtype=np.float64)
        if p.ndim != 2 or p.shape[0] != p.shape[1]:
            raise DimensionError(f"Plücker matrix must be square, got shape {p.shape}")
        p.flags.writeable = False
        object.__setattr__(self, "matrix", p)

    def rank(self) -> int:
        return _linalg.rank(self.matrix, RANK_RTOL)

    def null_space(self) -> np.ndarray:
        return _linalg.null_space(self.matrix, RANK_RTOL)

    def __matmul__(self, other):
        return self.matrix @ other


def plucker_line(x, y) -> PlueckerMatrix:
    x = _vector(x, "X")
    y = _vector(y, "Y", x.shape[0])
    p = np.outer(x, y) - np.outer(y, x)
    return PlueckerMatrix(p, (x.copy(), y.copy()))


def _matrix(p) -> np.ndarray:
    if isinstance(p, PlueckerMatrix):
        return p.matrix
    return np.asarray(p, dtype=np.float64)


def plucker_equivalent(p1, p2, tol: float = 1e-9) -> float | None:
    """Return ``lam`` with ``p1 == lam * p2`` (to ``tol``), else ``None``.

    ``lam`` is the least-squares ratio over the entries of ``p2`` larger than
    ``tol * ||p2||``; the fit is accepted when
    ``||p1 - lam * p2|| <= tol * ||p1||``.
    """
    a, b = _matrix(p1), _matrix(p2)
    if a.shape != b.shape:
        raise DimensionError(f"shapes {a.shape} and {b.shape} differ")
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ArgumentError("Plücker matrices must be nonzero")
    mask = np.abs(b) > tol * nb
    lam = float(np.sum(a[mask] * b[mask]) / np.sum(b[mask] ** 2))
    if lam == 0.0 or np.linalg.norm(a - lam * b) > tol * na:
        return None
    return lam


def orthonormalize_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Gram-Schmidt on (X, Y); the resulting Plücker matrix is a positive
    multiple of the original one."""
    x = _vector(x, "X")
    y = _vector(y, "Y", x.shape[0])
    nx = np.linalg.norm(x)
    if nx == 0.0:
        raise DegenerateConfigurationError("X is the zero vector")
    x1 = x / nx
    y_bar = y - np.dot(x1, y) * x1
    ny = np.linalg.norm(y_bar)
    if ny <= RANK_RTOL * max(np.linalg.norm(y), 1.0):
        raise DegenerateConfigurationError("X and Y span less than a line")
    return x1, y_bar / ny


def _independent_columns(cols: np.ndarray, what: str) -> None:
    if _linalg.rank(cols, RANK_RTOL) < cols.shape[1]:
        raise DegenerateConfigurationError(f"{what} are linearly dependent")


def plane_tensor(p1, p2, p3) -> AntisymTensor:
    """``p1 ^ p2 ^ p3`` for three homogeneous points in general position."""
    p1 = _vector(p1, "p1")
    cols = np.column_stack([p1, _vector(p2, "p2", p1.shape[0]), _vector(p3, "p3", p1.shape[0])])
    _independent_columns(cols, "points")
    return grassmann_from_columns(cols)


def tensor_point_residual(a, x) -> np.ndarray:
    """Contract the last mode of ``a`` with ``x``: ``(A x)[i] = sum_j A[i, j] x_j``."""
    dense = as_dense(a)
    if dense.ndim == 0:
        raise DimensionError("cannot contract an order-0 tensor")
    x = _vector(x, "x", dense.shape[-1])
    return dense @ x


def plane_residual(a, x) -> np.ndarray:
    """``A ^ x``; vanishes exactly when ``x`` lies in the span of A's generators.

    For the tensor of three points in P^3 this is
    ``det[p1, p2, p3, x]`` times the sign tensor.
    """
    dense = as_dense(a)
    x = _vector(x, "x", dense.shape[0] if dense.ndim else None)
    return wedge_vec(dense, x)


def is_negligible(residual, scale: float, tol: float = 1e-9) -> bool:
    """True when ``max|residual| <= tol * scale``."""
    residual = np.asarray(residual)
    return float(np.max(np.abs(residual), initial=0.0)) <= tol * scale


def point_on_plane(a, x, tol: float = 1e-9) -> bool:
    dense = as_dense(a)
    x = np.asarray(x, dtype=np.float64)
    scale = float(np.max(np.abs(dense))) * float(np.max(np.abs(x)))
    return is_negligible(plane_residual(dense, x), scale, tol)


def intersect_planes(a1, a2, a3) -> np.ndarray:
    """Common point of three planes: the null vector of the 3 x 4 stack."""
    a1 = _vector(a1, "alpha1")
    stack = np.vstack([a1, _vector(a2, "alpha2", a1.shape[0]), _vector(a3, "alpha3", a1.shape[0])])
    basis = _linalg.null_space(stack, RANK_RTOL)
    if basis.shape[1] != stack.shape[1] - 3:
        raise DegenerateConfigurationError("planes are not in general position")
    return _linalg.canonical_direction(basis[:, 0])


def epipolar_residual(f, x, x_prime) -> float:
    """``x'^T F x``, computed as ``F x_(1) x' x_(1) x`` (two mode contractions)."""
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (3, 3):
        raise DimensionError(f"fundamental matrix must be 3 x 3, got {f.shape}")
    x = _vector(x, "x", 3)
    x_prime = _vector(x_prime, "x'", 3)
    if not x.any() or not x_prime.any():
        raise ArgumentError("homogeneous points must be nonzero")
    # contracting mode 1 with x' leaves F's column mode as the only mode
    return float(contract_mode(contract_mode(f, x_prime, 1), x, 1))


@dataclass(frozen=True)
class WedgeFamily:
    """Generators ``a^1..a^m`` (columns) and their leave-one-out wedges.

    ``wedges[k]`` is the wedge of every generator except ``a^(k+1)``, in
    ascending order.
    """

    generators: np.ndarray
    wedges: tuple[AntisymTensor, ...]

    @property
    def size(self) -> int:
        return self.generators.shape[1]

    def coordinate_matrix(self) -> np.ndarray:
        """m x C(n, m-1) matrix whose rows are the flattened wedges."""
        return np.vstack([w.flat() for w in self.wedges])


def leave_one_out_wedges(*generators) -> WedgeFamily:
    if len(generators) <= 1:
        raise ArgumentError("need at least two generators")
    cols = np.column_stack([_vector(g, f"a^{k + 1}") for k, g in enumerate(generators)])
    n, m = cols.shape
    if m > n:
        raise ArgumentError(f"{m} generators exceed dimension {n}")
    cols.flags.writeable = False
    wedges = tuple(grassmann_from_columns(np.delete(cols, k, axis=1)) for k in range(m))
    return WedgeFamily(cols, wedges)


def wedge_family_independent(family: WedgeFamily, rtol: float = RANK_RTOL) -> bool:
    return _linalg.rank(family.coordinate_matrix(), rtol) == family.size


@dataclass(frozen=True)
class Polytope:
    """H-representation ``{x : A^T x <= b}``; columns of ``A`` are facet normals."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=np.float64)
        b = np.array(self.b, dtype=np.float64)
        if a.ndim != 2 or b.ndim != 1 or a.shape[1] != b.shape[0]:
            raise DimensionError(f"incompatible shapes A {a.shape} and b {b.shape}")
        zero = np.flatnonzero(~a.any(axis=0))
        if zero.size:
            raise ArgumentError(f"column {zero[0] + 1} of A is zero")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    def rank(self) -> int:
        return _linalg.rank(self.a, RANK_RTOL)

    def basis(self) -> list[int]:
        """Indices (0-based) of a maximal independent set of columns."""
        return _linalg.rref(self.a, RANK_RTOL)[1]


def polytope_contains(w: Polytope, x, tol: float = 1e-9) -> bool:
    x = _vector(x, "x", w.dim)
    return bool(np.all(w.a.T @ x <= w.b + tol))


def polytope_surface_residual(w: Polytope, basis, x) -> np.ndarray:
    """``(a^{i_1} ^ ... ^ a^{i_r}) x`` over a column basis of ``A``.

    Zero exactly when every selected normal is orthogonal to ``x``
    (equivalently ``A^T x = 0``); the offsets ``b`` play no part.
    """
    basis = [int(i) for i in basis]
    if not basis or min(basis) < 0 or max(basis) >= w.a.shape[1]:
        raise ArgumentError(f"basis {basis} out of range")
    if len(set(basis)) != len(basis):
        raise ArgumentError(f"basis {basis} repeats a column")
    r = w.rank()
    if len(basis) != r:
        raise ArgumentError(f"basis has {len(basis)} columns but rank(A) = {r}")
    cols = w.a[:, basis]
    if _linalg.rank(cols, RANK_RTOL) < len(basis):
        raise ArgumentError(f"columns {basis} are not linearly independent")
    x = _vector(x, "x", w.dim)
    return tensor_point_residual(grassmann_from_columns(cols), x)
