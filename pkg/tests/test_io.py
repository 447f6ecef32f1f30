import json

import pytest

from nilgeo import catalog
from nilgeo.exact import Q
from nilgeo.io import (
    SchemaError,
    algebra_from_dict,
    algebra_to_dict,
    lattice_scales_from_dict,
    load_algebra,
    load_document,
    save_algebra,
)


@pytest.mark.parametrize("name", ["paper-nj", "paper-njprime", "quaternionic-heisenberg", "random-2-5-3"])
def test_round_trip(tmp_path, name):
    A = catalog.get(name)
    path = tmp_path / "alg.json"
    save_algebra(A, path)
    B = load_algebra(path)
    assert B == A
    assert B.labels == A.labels
    assert B.name == A.name


def test_lattice_round_trip():
    A = catalog.paper_nj()
    doc = algebra_to_dict(A, M_scale=[1] * 6, L_scale=[Q(1, 2)] * 3)
    M, L = lattice_scales_from_dict(json.loads(json.dumps(doc)), 6, 3)
    assert M == [1] * 6 and L == [Q(1, 2)] * 3


def test_brackets_form():
    doc = {"dim_v": 2, "dim_z": 1, "brackets": [{"a": 0, "b": 1, "z": ["1"]}]}
    assert algebra_from_dict(doc) == catalog.heisenberg(1)


def test_integers_accepted_as_rationals():
    doc = {"dim_v": 2, "dim_z": 1, "j": [[[0, 1], [-1, 0]]]}
    assert algebra_from_dict(doc) == catalog.heisenberg(1)


@pytest.mark.parametrize("doc,path", [
    ([], "$"),
    ({"dim_z": 1, "j": []}, "$"),
    ({"dim_v": -1, "dim_z": 1, "j": []}, "$.dim_v"),
    ({"dim_v": 2, "dim_z": 1}, "$"),
    ({"dim_v": 2, "dim_z": 1, "j": [], "brackets": []}, "$"),
    ({"dim_v": 2, "dim_z": 1, "j": [[["0", "1"], ["1", "0"]]]}, "$.j[0][0][1]"),
    ({"dim_v": 2, "dim_z": 1, "j": [[["0", "1.5"], ["-1", "0"]]]}, "$.j[0][0][1]"),
    ({"dim_v": 2, "dim_z": 1, "j": [[["0", "1"]]]}, "$.j[0]"),
    ({"dim_v": 2, "dim_z": 1, "j": [[["0", "1"], ["-1", "0"]]], "extra": 1}, "$.extra"),
    ({"dim_v": 2, "dim_z": 1, "brackets": [{"a": 0, "b": 5, "z": ["1"]}]}, "$.brackets[0].b"),
    ({"dim_v": 2, "dim_z": 1, "brackets": [{"a": 0, "b": 1, "z": [True]}]}, "$.brackets[0].z[0]"),
    ({"dim_v": 2, "dim_z": 1, "brackets": [{"a": 0, "b": 1}]}, "$.brackets[0]"),
])
def test_schema_errors_carry_json_path(doc, path):
    with pytest.raises(SchemaError) as info:
        algebra_from_dict(doc)
    assert info.value.path == path


def test_lattice_schema_errors():
    with pytest.raises(SchemaError) as info:
        lattice_scales_from_dict({"lattice": {"L_scale": ["0"]}}, 2, 1)
    assert info.value.path == "$.lattice.L_scale[0]"
    with pytest.raises(SchemaError):
        lattice_scales_from_dict({"lattice": {"M_scale": ["1"]}}, 2, 1)


def test_load_document_errors(tmp_path):
    with pytest.raises(SchemaError):
        load_document(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError) as info:
        load_document(bad)
    assert "line 1" in info.value.message
