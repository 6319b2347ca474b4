"""Rebuild the golden corpus: input fixtures and the expected CLI outputs.

Run ``python tests/golden/regen.py`` after an intentional output change and
review the diff before committing.
"""

import contextlib
import io as _io
import os
from pathlib import Path

HERE = Path(__file__).resolve().parent
INPUTS = HERE / "inputs"
EXPECTED = HERE / "expected"

# hand-authored inputs; Plücker fixtures are built from generator pairs below
CSV_INPUTS = {
    "basis2.csv": "1,0,0\n0,1,0\n",
    "vectors3.csv": "1,2,0,-1\n0,1,3,2\n2,-1,1,0\n",
    "mat_a.csv": "1,2\n3,4\n",
    "mat_b.csv": "0,1\n1,0\n",
    "vec2.csv": "5,-2\n",
    "line_xy.csv": "1,2,0,1\n0,1,3,1\n",
    "plane_pts.csv": "1,0,0,0\n0,1,0,0\n0,0,1,0\n",
    "plane_test.csv": "1,0,0,0\n0,0,0,1\n1,2,-1,0\n",
    "planes3.csv": "1,0,0,0\n0,1,0,0\n0,0,1,-1\n",
    "fundamental.csv": "0,0,0\n0,0,-1\n0,1,0\n",
    "epi_x.csv": "0,0,1\n1,2,3\n",
    "epi_xp.csv": "1,0,0\n0,1,1\n",
    "box_pts.csv": "0,0,0\n2,0,0\n1,0.5,-1\n",
    "eval_x.csv": "1,1,1,1\n0.5,-2,3,0.25\n",
}

JSON_INPUTS = {
    "tensor3.json": '{\n  "shape": [3, 3, 3],\n  "layout": "dense",\n  "values": [-5, 2, 1, 3, -3, 5, 5, -3, 3, 1, 2, -5, 2, 1, 3, -3, 5, 5, -3, 3, 1, 2, -5, 2, 1, 3, -3]\n}\n',
    "tensor3_small.json": '{\n  "shape": [2, 2, 2],\n  "layout": "dense",\n  "values": [1, 2, 3, 4, 5, 6, 7, 8]\n}\n',
    "box.json": '{\n  "A": [\n    [1, 0, 0],\n    [0, 1, 0],\n    [0, 0, 1]\n  ],\n  "b": [1, 1, 1]\n}\n',
}

PLUCKER_INPUTS = {
    "line_p1.json": ([1, 2, 0, 1], [0, 1, 3, 1]),
    "line_p2.json": ([2, 4, 0, 2], [0, 1, 3, 1]),
    "line_p3.json": ([1, 2, 0, 1], [1, 0, 0, 0]),
}

# (name, argv, expected exit code)
CASES = [
    ("grassmann_basis2", ["grassmann", "--vectors", "basis2.csv"], 0),
    ("grassmann_vectors3", ["grassmann", "--vectors", "vectors3.csv"], 0),
    ("grassmann_vectors3_dense", ["grassmann", "--vectors", "vectors3.csv", "--format", "dense"], 0),
    ("wedge_matrices", ["wedge", "mat_a.csv", "mat_b.csv"], 0),
    ("antisym_tensor3", ["antisym", "tensor3.json"], 0),
    ("antisym_order_above_dim", ["antisym", "tensor3_small.json", "--format", "sparse"], 0),
    ("plucker_line", ["plucker-line", "line_xy.csv"], 0),
    ("plucker_equiv_scaled", ["plucker-equiv", "line_p1.json", "line_p2.json"], 0),
    ("plucker_equiv_distinct", ["plucker-equiv", "line_p1.json", "line_p3.json"], 1),
    ("plane_tensor", ["plane", "plane_pts.csv"], 0),
    ("plane_membership", ["plane", "plane_pts.csv", "--point", "plane_test.csv"], 0),
    ("intersect_planes", ["intersect-planes", "planes3.csv"], 0),
    ("epipolar", ["epipolar", "fundamental.csv", "epi_x.csv", "epi_xp.csv"], 0),
    ("polytope_box", ["polytope-check", "box.json", "box_pts.csv"], 0),
    ("contract_mode1", ["contract", "mat_a.csv", "mat_b.csv", "--mode", "1"], 0),
    ("contract_paired", ["contract", "mat_a.csv", "vec2.csv", "--format", "sparse"], 0),
    ("eval_poly_grassmann", ["eval-poly", "grassmann3.json", "eval_x.csv"], 0),
]


def run_case(argv):
    """Run the CLI in-process from the inputs directory; return (code, stdout)."""
    from grassmann_tensors.cli import run

    buf = _io.StringIO()
    cwd = os.getcwd()
    os.chdir(INPUTS)
    try:
        with contextlib.redirect_stdout(buf):
            code = run(argv)
    finally:
        os.chdir(cwd)
    return code, buf.getvalue()


def write_inputs():
    from grassmann_tensors import io, plucker_line

    INPUTS.mkdir(exist_ok=True)
    for name, text in {**CSV_INPUTS, **JSON_INPUTS}.items():
        (INPUTS / name).write_text(text, encoding="utf-8")
    for name, (x, y) in PLUCKER_INPUTS.items():
        (INPUTS / name).write_text(io.dumps(io.plucker_to_json(plucker_line(x, y))), encoding="utf-8")
    # the eval-poly fixture is the Grassmann tensor of vectors3.csv
    _, text = run_case(["grassmann", "--vectors", "vectors3.csv"])
    (INPUTS / "grassmann3.json").write_text(text, encoding="utf-8")


def main():
    write_inputs()
    EXPECTED.mkdir(exist_ok=True)
    for name, argv, want in CASES:
        code, out = run_case(argv)
        if code != want:
            raise SystemExit(f"{name}: exit {code}, expected {want}")
        (EXPECTED / f"{name}.out").write_text(out, encoding="utf-8")
        print(f"{name}: {len(out)} bytes")


if __name__ == "__main__":
    main()
