import json

import pytest

from zhulab.algebra import dual_numbers
from zhulab.linalg import Q
from zhulab.report import render, to_csv, to_json


def test_json_is_canonical():
    rep = {"b": Q(-1, 5), "a": (1, 2), "alg": dual_numbers()}
    text = to_json(rep)
    assert text.endswith("\n")
    back = json.loads(text)
    assert back["b"] == "-1/5" and back["a"] == [1, 2] and back["schema"] == 1
    assert to_json(json.loads(text)) == text


def test_csv_only_for_dimension_tables():
    rep = {"quotient": {"caps": [{"K": 6, "dims": [1, 2]}]}, "dims_by_weight": [1, 1]}
    rows = to_csv(rep).splitlines()
    assert rows[0] == "table,K,k,dim"
    assert "quotient,6,1,2" in rows and "dims_by_weight,,1,1" in rows
    with pytest.raises(ValueError):
        to_csv({"tensor": [[1]]})
    with pytest.raises(ValueError):
        render({}, "xml")


def test_unserializable():
    with pytest.raises(TypeError):
        to_json({"x": object()})
