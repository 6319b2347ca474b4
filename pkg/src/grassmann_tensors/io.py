"""Reading and writing tensors, Plücker matrices and polytopes.

All user-facing indices are 1-based. Floats are written with 17 significant
digits, so parsing and re-serializing a canonical file is bit-exact.

Dense tensor::

    {"shape": [2, 2], "layout": "dense", "values": [0, 1, -1, 0]}

Sparse tensor (entries sorted lexicographically)::

    {"shape": [2, 2], "layout": "sparse",
     "entries": [{"index": [1, 2], "value": 1}, {"index": [2, 1], "value": -1}]}

Antisymmetric tensor (only nonzero coordinates are written)::

    {"order": 2, "dim": 2, "coords": [{"index": [1, 2], "value": 1}]}

Plücker matrix: a dense tensor object with an optional ``"generators"``
field ``[X, Y]``. Polytope: ``{"A": [column, ...], "b": [...]}``.

Vectors and matrices may also be given as CSV, one row per line, no header.
"""

from __future__ import annotations

import json
import math
from itertools import product
from pathlib import Path

import numpy as np

from .grassmann import AntisymTensor
from .multiview import PlueckerMatrix, Polytope


class ParseError(Exception):
    """A file could not be read or does not follow the expected format."""


def format_float(v: float) -> str:
    v = float(v)
    if not math.isfinite(v):
        raise ValueError(f"cannot serialize non-finite value {v}")
    # -0.0 would not survive a JSON round trip (it parses as the integer 0)
    return format(v + 0.0, ".17g")


def _emit(obj, indent: int) -> str:
    pad = "  " * indent
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}  {json.dumps(str(k))}: {_emit(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if any(isinstance(v, (dict, list, tuple)) for v in obj):
            items = [f"{pad}  {_emit_inline(v)}" for v in obj]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        return "[" + ", ".join(_emit(v, indent) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit_inline(obj) -> str:
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_emit_inline(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_emit_inline(v) for v in obj) + "]"
    return _emit(obj, 0)


def dumps(obj) -> str:
    """Canonical JSON text (trailing newline included)."""
    return _emit(obj, 0) + "\n"


def _float_list(values) -> list[float]:
    return [float(v) for v in np.asarray(values, dtype=np.float64).ravel()]


# -- tensors -----------------------------------------------------------------


def tensor_to_json(t, layout: str = "dense") -> dict:
    t = np.asarray(t, dtype=np.float64)
    shape = [int(s) for s in t.shape]
    if layout == "dense":
        return {"shape": shape, "layout": "dense", "values": _float_list(t)}
    if layout == "sparse":
        entries = [
            {"index": [i + 1 for i in idx], "value": float(t[idx])}
            for idx in product(*(range(s) for s in shape))
            if t[idx] != 0.0
        ]
        return {"shape": shape, "layout": "sparse", "entries": entries}
    raise ValueError(f"unknown layout {layout!r}")


def _shape(obj) -> tuple[int, ...]:
    shape = obj.get("shape")
    if not isinstance(shape, list) or not all(isinstance(s, int) and s > 0 for s in shape):
        raise ParseError(f"'shape' must be a list of positive integers, got {shape!r}")
    return tuple(shape)


def _number(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: expected a number, got {v!r}")
    return float(v)


def _index(raw, bounds: tuple[int, ...], where: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != len(bounds):
        raise ParseError(f"{where}: index must be a list of {len(bounds)} integers")
    idx = []
    for i, b in zip(raw, bounds):
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= b:
            raise ParseError(f"{where}: index {raw} out of range (1-based, bounds {list(bounds)})")
        idx.append(i - 1)
    return tuple(idx)


def tensor_from_json(obj: dict) -> np.ndarray:
    shape = _shape(obj)
    layout = obj.get("layout")
    if layout == "dense":
        values = obj.get("values")
        if not isinstance(values, list) or len(values) != math.prod(shape):
            raise ParseError(f"'values' must hold {math.prod(shape)} numbers")
        flat = [_number(v, f"values[{k}]") for k, v in enumerate(values)]
        return np.array(flat, dtype=np.float64).reshape(shape)
    if layout == "sparse":
        entries = obj.get("entries")
        if not isinstance(entries, list):
            raise ParseError("'entries' must be a list")
        t = np.zeros(shape)
        for k, e in enumerate(entries):
            if not isinstance(e, dict):
                raise ParseError(f"entries[{k}] must be an object")
            t[_index(e.get("index"), shape, f"entries[{k}]")] = _number(e.get("value"), f"entries[{k}]")
        return t
    raise ParseError(f"unknown layout {layout!r}")


def antisym_to_json(a: AntisymTensor) -> dict:
    coords = [
        {"index": [i + 1 for i in key], "value": float(v)}
        for key, v in sorted(a.coords.items())
        if v != 0.0
    ]
    return {"order": a.order, "dim": a.dim, "coords": coords}


def antisym_from_json(obj: dict) -> AntisymTensor:
    m, n = obj.get("order"), obj.get("dim")
    if not isinstance(m, int) or not isinstance(n, int) or m < 0 or n < m:
        raise ParseError(f"invalid order/dim {m!r}/{n!r}")
    entries = obj.get("coords")
    if not isinstance(entries, list):
        raise ParseError("'coords' must be a list")
    coords = {}
    for k, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ParseError(f"coords[{k}] must be an object")
        key = _index(e.get("index"), (n,) * m, f"coords[{k}]")
        if any(b <= a for a, b in zip(key, key[1:])):
            raise ParseError(f"coords[{k}]: index must be strictly increasing")
        coords[key] = _number(e.get("value"), f"coords[{k}]")
    return AntisymTensor(m, n, coords)


# -- geometry objects --------------------------------------------------------


def plucker_to_json(p: PlueckerMatrix) -> dict:
    obj = tensor_to_json(p.matrix, "dense")
    if p.generators is not None:
        obj["generators"] = [_float_list(g) for g in p.generators]
    return obj


def plucker_from_json(obj) -> PlueckerMatrix:
    if isinstance(obj, list):
        return PlueckerMatrix(_matrix_from_list(obj))
    matrix = tensor_from_json(obj)
    if matrix.ndim != 2:
        raise ParseError("Plücker matrix must have order 2")
    gens = obj.get("generators")
    if gens is not None:
        if not isinstance(gens, list) or len(gens) != 2:
            raise ParseError("'generators' must be a list [X, Y]")
        gens = tuple(np.array([_number(v, "generators") for v in g]) for g in gens)
    return PlueckerMatrix(matrix, gens)


def polytope_to_json(w: Polytope) -> dict:
    return {"A": [_float_list(col) for col in w.a.T], "b": _float_list(w.b)}


def polytope_from_json(obj: dict) -> Polytope:
    cols, b = obj.get("A"), obj.get("b")
    if not isinstance(cols, list) or not cols or not isinstance(b, list):
        raise ParseError("polytope needs a nonempty column list 'A' and a list 'b'")
    a = _matrix_from_list(cols).T
    return Polytope(a, np.array([_number(v, "b") for v in b]))


def _matrix_from_list(rows) -> np.ndarray:
    if not all(isinstance(r, list) for r in rows) or len({len(r) for r in rows}) != 1:
        raise ParseError("expected a rectangular list of lists")
    return np.array([[_number(v, f"row {i + 1}") for v in r] for i, r in enumerate(rows)])


# -- CSV ---------------------------------------------------------------------


def parse_csv(text: str, source: str = "<csv>") -> np.ndarray:
    """Parse comma-separated rows into a 2-D array."""
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        offset = 0
        for tok in line.split(","):
            try:
                row.append(float(tok))
            except ValueError:
                raise ParseError(
                    f"{source}: line {lineno}, offset {offset}: cannot parse {tok.strip()!r} as a number"
                ) from None
            offset += len(tok) + 1
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"{source}: line {lineno}: expected {width} values, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ParseError(f"{source}: no data")
    return np.array(rows, dtype=np.float64)


def format_csv(a) -> str:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 1:
        a = a[None, :]
    if a.ndim != 2:
        raise ValueError("CSV holds vectors and matrices only")
    return "".join(",".join(format_float(v) for v in row) + "\n" for row in a)


# -- files -------------------------------------------------------------------


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None


def parse(text: str, source: str = "<input>"):
    """Parse JSON or CSV text; JSON is recognised by a leading ``{`` or ``[``."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_csv(text, source)


def load(path):
    return parse(read_text(path), str(path))


def to_array(obj, source: str = "<input>") -> np.ndarray:
    """Interpret any parsed object that denotes a dense tensor."""
    if isinstance(obj, np.ndarray):
        return obj
    try:
        if isinstance(obj, list):
            return _matrix_from_list(obj) if obj and isinstance(obj[0], list) else np.array(
                [_number(v, "vector") for v in obj]
            )
        if isinstance(obj, dict):
            if "layout" in obj:
                return tensor_from_json(obj)
            if "coords" in obj:
                return antisym_from_json(obj).to_dense()
    except ParseError as exc:
        raise ParseError(f"{source}: {exc}") from None
    raise ParseError(f"{source}: not a tensor")


def load_tensor(path) -> np.ndarray:
    """Load a tensor; a single-row CSV file is read as a vector."""
    obj = load(path)
    arr = to_array(obj, str(path))
    if isinstance(obj, np.ndarray) and arr.shape[0] == 1:
        return arr[0]
    return arr


def load_rows(path) -> list[np.ndarray]:
    """Load the vectors stored in a file: one per CSV row / matrix row."""
    arr = to_array(load(path), str(path))
    if arr.ndim == 1:
        return [arr]
    if arr.ndim == 2:
        return list(arr)
    raise ParseError(f"{path}: expected vectors, got an order-{arr.ndim} tensor")


def load_plucker(path) -> PlueckerMatrix:
    obj = load(path)
    if isinstance(obj, np.ndarray):
        return PlueckerMatrix(obj)
    try:
        return plucker_from_json(obj)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_polytope(path) -> Polytope:
    obj = load(path)
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: polytope must be a JSON object")
    try:
        return polytope_from_json(obj)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def reserialize(text: str) -> str:
    """Parse canonical text and write it back in the same representation."""
    obj = parse(text)
    if isinstance(obj, np.ndarray):
        return format_csv(obj)
    if isinstance(obj, dict):
        if "coords" in obj:
            return dumps(antisym_to_json(antisym_from_json(obj)))
        if "A" in obj:
            return dumps(polytope_to_json(polytope_from_json(obj)))
        if "generators" in obj:
            return dumps(plucker_to_json(plucker_from_json(obj)))
        if "layout" in obj:
            return dumps(tensor_to_json(tensor_from_json(obj), obj["layout"]))
    # result reports and bare lists carry no schema beyond canonical JSON
    return dumps(obj)
