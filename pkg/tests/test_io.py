import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import array_shapes, arrays

from grassmann_tensors import grassmann_from_vectors, io, plucker_line
from grassmann_tensors.multiview import Polytope

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=200, deadline=None)
@given(finite)
def test_float_text_is_exact(v):
    assert float(io.format_float(v)) == v


def test_negative_zero_normalized():
    assert io.format_float(-0.0) == "0"


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        io.format_float(float("nan"))


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, array_shapes(min_dims=1, max_dims=4, max_side=3), elements=finite))
def test_dense_round_trip(t):
    t = t + 0.0
    for layout in ("dense", "sparse"):
        text = io.dumps(io.tensor_to_json(t, layout))
        back = io.tensor_from_json(json.loads(text))
        np.testing.assert_array_equal(back, t)
        assert io.reserialize(text) == text


def test_sparse_sorted_and_one_based():
    t = np.zeros((2, 3))
    t[1, 2], t[0, 1] = 4.0, -1.0
    obj = io.tensor_to_json(t, "sparse")
    assert [e["index"] for e in obj["entries"]] == [[1, 2], [2, 3]]


def test_antisym_round_trip(rng):
    a = grassmann_from_vectors(*rng.standard_normal((3, 5)))
    text = io.dumps(io.antisym_to_json(a))
    back = io.antisym_from_json(json.loads(text))
    assert back.coords == a.coords
    assert io.reserialize(text) == text


def test_antisym_index_must_increase():
    with pytest.raises(io.ParseError, match="increasing"):
        io.antisym_from_json({"order": 2, "dim": 3, "coords": [{"index": [2, 1], "value": 1}]})


def test_plucker_round_trip(rng):
    p = plucker_line(*rng.standard_normal((2, 4)))
    text = io.dumps(io.plucker_to_json(p))
    back = io.plucker_from_json(json.loads(text))
    np.testing.assert_array_equal(back.matrix, p.matrix)
    np.testing.assert_array_equal(back.generators[0], p.generators[0])
    assert io.reserialize(text) == text


def test_polytope_columns_are_normals():
    w = io.polytope_from_json({"A": [[1, 0], [1, 1]], "b": [1, 2]})
    np.testing.assert_array_equal(w.a, [[1, 1], [0, 1]])
    assert io.polytope_to_json(Polytope(w.a, w.b)) == {"A": [[1.0, 0.0], [1.0, 1.0]], "b": [1.0, 2.0]}


def test_csv_round_trip(rng):
    a = rng.standard_normal((3, 4))
    text = io.format_csv(a)
    np.testing.assert_array_equal(io.parse_csv(text), a)
    assert io.reserialize(text) == text


def test_csv_error_names_line_and_offset():
    with pytest.raises(io.ParseError, match=r"line 2, offset 4: cannot parse 'x'"):
        io.parse_csv("1,2,3\n1,2,x\n", "f.csv")


def test_csv_ragged():
    with pytest.raises(io.ParseError, match="line 2: expected 2 values"):
        io.parse_csv("1,2\n3\n")


def test_json_error_names_line_and_column():
    with pytest.raises(io.ParseError, match=r"line 2, column"):
        io.parse('{\n  "shape": [2,,]\n}')


def test_index_out_of_range():
    with pytest.raises(io.ParseError, match="out of range"):
        io.tensor_from_json({"shape": [2], "layout": "sparse", "entries": [{"index": [3], "value": 1}]})


def test_missing_file(tmp_path):
    with pytest.raises(io.ParseError):
        io.load(tmp_path / "nope.csv")


def test_single_row_csv_is_vector(tmp_path):
    f = tmp_path / "v.csv"
    f.write_text("1,2,3\n")
    assert io.load_tensor(f).shape == (3,)
    assert len(io.load_rows(f)) == 1
