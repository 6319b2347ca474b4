"""Command-line front end.

Exit status: 0 on success, 1 when the inputs fail a mathematical check
(dimension mismatch, degenerate configuration, non-equivalent lines), 2 on
usage, I/O or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .errors import ArgumentError, GrassmannError, ValidationError
from .grassmann import AntisymTensor, antisymmetrize, grassmann_from_vectors, wedge
from .multiview import (
    intersect_planes,
    is_negligible,
    plane_residual,
    plane_tensor,
    plucker_equivalent,
    plucker_line,
    polytope_contains,
    polytope_surface_residual,
    epipolar_residual,
)
from .tensor import contract_mode, contract_paired, poly_eval

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class _Failure(Exception):
    """A handled failure that should print ``message`` and exit with ``code``."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid float {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _gather_rows(paths, count: int, what: str) -> list[np.ndarray]:
    rows = [row for p in paths for row in io.load_rows(p)]
    if len(rows) != count:
        raise ValidationError(f"expected {count} {what}, got {len(rows)}")
    return rows


def _antisym_or_dense(t: np.ndarray, fmt: str | None, tol: float) -> dict:
    """Compact coords for antisymmetric results unless dense output is asked for."""
    if fmt == "dense":
        return io.tensor_to_json(t, "dense")
    try:
        return io.antisym_to_json(AntisymTensor.from_dense(t, tol))
    except (ValidationError, ArgumentError):
        # not antisymmetric, or order above dimension (then the tensor is zero)
        return io.tensor_to_json(t, fmt or "dense")


def _antisym_output(a: AntisymTensor, fmt: str | None) -> dict:
    if fmt == "dense":
        return io.tensor_to_json(a.to_dense(), "dense")
    return io.antisym_to_json(a)


def _cmd_wedge(args) -> dict:
    return _antisym_or_dense(wedge(io.load_tensor(args.a), io.load_tensor(args.b)), args.format, args.tol)


def _cmd_antisym(args) -> dict:
    return _antisym_or_dense(antisymmetrize(io.load_tensor(args.tensor)), args.format, args.tol)


def _cmd_grassmann(args) -> dict:
    vectors = [row for p in args.vectors for row in io.load_rows(p)]
    return _antisym_output(grassmann_from_vectors(*vectors), args.format)


def _cmd_plucker_line(args) -> dict:
    x, y = _gather_rows(args.points, 2, "points")
    return io.plucker_to_json(plucker_line(x, y))


def _cmd_plucker_equiv(args) -> dict:
    lam = plucker_equivalent(io.load_plucker(args.p1), io.load_plucker(args.p2), args.tol)
    if lam is None:
        raise _Failure("not equivalent", EXIT_INVALID)
    return {"lambda": lam}


def _cmd_plane(args) -> dict:
    p1, p2, p3 = _gather_rows(args.points, 3, "points")
    plane = plane_tensor(p1, p2, p3)
    if not args.point:
        return _antisym_output(plane, args.format)
    dense = plane.to_dense()
    report = []
    for k, x in enumerate(row for p in args.point for row in io.load_rows(p)):
        residual = plane_residual(dense, x)
        scale = float(np.max(np.abs(dense))) * float(np.max(np.abs(x)))
        report.append(
            {
                "point": k + 1,
                "on_plane": is_negligible(residual, scale, args.tol),
                "residual_max": float(np.max(np.abs(residual))),
            }
        )
    return {"plane": io.antisym_to_json(plane), "points": report}


def _cmd_intersect(args) -> dict:
    a1, a2, a3 = _gather_rows(args.planes, 3, "planes")
    return io.tensor_to_json(intersect_planes(a1, a2, a3), "dense")


def _cmd_epipolar(args) -> dict:
    f = io.load_tensor(args.fundamental)
    xs = io.load_rows(args.x)
    xps = io.load_rows(args.x_prime)
    if len(xs) != len(xps):
        raise ValidationError(f"{len(xs)} points in x but {len(xps)} in x'")
    return {"residuals": [epipolar_residual(f, x, xp) for x, xp in zip(xs, xps)]}


def _cmd_polytope(args) -> dict:
    w = io.load_polytope(args.polytope)
    if args.basis:
        try:
            basis = [int(t) - 1 for t in args.basis.split(",")]
        except ValueError:
            raise _Failure(f"invalid --basis {args.basis!r}", EXIT_USAGE) from None
    else:
        basis = w.basis()
    report = []
    for k, x in enumerate(io.load_rows(args.points)):
        residual = polytope_surface_residual(w, basis, x)
        scale = float(np.max(np.abs(w.a))) ** len(basis) * float(np.max(np.abs(x), initial=0.0))
        report.append(
            {
                "point": k + 1,
                "contains": polytope_contains(w, x, args.tol),
                "residual_max": float(np.max(np.abs(residual), initial=0.0)),
                "normals_orthogonal": is_negligible(residual, scale, args.tol),
            }
        )
    return {"rank": len(basis), "basis": [i + 1 for i in basis], "points": report}


def _cmd_contract(args) -> dict:
    a, b = io.load_tensor(args.a), io.load_tensor(args.b)
    result = contract_mode(a, b, args.mode) if args.mode else contract_paired(a, b)
    return io.tensor_to_json(result, args.format or "dense")


def _cmd_eval_poly(args) -> dict:
    a = io.load_tensor(args.tensor)
    return {"values": [poly_eval(a, x) for x in io.load_rows(args.x)]}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("dense", "sparse"), default=None,
                        help="tensor output layout (antisymmetric results default to sparse)")
    common.add_argument("--tol", type=_positive_float, default=1e-9)
    common.add_argument("--output", "-o", help="write the result here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="grassmann-tensors",
        description="Grassmann tensors, wedge products and Plücker geometry.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("wedge", _cmd_wedge, "wedge product of two cubical tensors")
    p.add_argument("a")
    p.add_argument("b")
    p = add("antisym", _cmd_antisym, "antisymmetrize a tensor (unnormalized)")
    p.add_argument("tensor")
    p = add("grassmann", _cmd_grassmann, "Grassmann tensor of a vector family")
    p.add_argument("--vectors", nargs="+", required=True, help="files whose rows are the vectors")
    p = add("plucker-line", _cmd_plucker_line, "Plücker matrix of the line through two points")
    p.add_argument("points", nargs="+", help="files holding the two points (one per row)")
    p = add("plucker-equiv", _cmd_plucker_equiv, "test whether p1 = lambda * p2")
    p.add_argument("p1")
    p.add_argument("p2")
    p = add("plane", _cmd_plane, "plane tensor of three points, optionally testing points")
    p.add_argument("points", nargs="+")
    p.add_argument("--point", nargs="+", help="files of points to test for membership")
    p = add("intersect-planes", _cmd_intersect, "common point of three planes")
    p.add_argument("planes", nargs="+")
    p = add("epipolar", _cmd_epipolar, "epipolar residuals x'^T F x for paired rows")
    p.add_argument("fundamental")
    p.add_argument("x")
    p.add_argument("x_prime")
    p = add("polytope-check", _cmd_polytope, "membership and wedge residuals for points")
    p.add_argument("polytope")
    p.add_argument("points")
    p.add_argument("--basis", help="comma-separated 1-based column indices")
    p = add("contract", _cmd_contract, "contract A with B (paired, or along --mode)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", type=int, help="1-based mode of A to contract with B's rows")
    p = add("eval-poly", _cmd_eval_poly, "evaluate A x^m for each row x")
    p.add_argument("tensor")
    p.add_argument("x")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = io.dumps(args.func(args))
    except _Failure as exc:
        print(str(exc), file=sys.stdout if exc.code == EXIT_INVALID else sys.stderr)
        return exc.code
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GrassmannError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: {args.output}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
