import json

import pytest

from genuscodes import catalog
from genuscodes.codefile import dumps, export_code, export_document, import_code
from genuscodes.errors import CodeFileError, InconsistentGenerators, NonCommutingGenerators


def doc(**overrides):
    base = {"name": "t", "n": 6, "stabilizers": ["X1X2X3X4", "Z1Z3Z5"], "logical_pairs": []}
    base.update(overrides)
    return json.dumps(base)


@pytest.mark.parametrize("name", catalog.catalog_names() + ["genus2-chain-3"])
def test_round_trip(name):
    code = catalog.get_code(name)
    text = export_code(code)
    again = import_code(text)
    assert again == code
    assert again.metadata == code.metadata
    assert again.allow_anticommuting == code.allow_anticommuting
    assert export_code(again) == text


def test_genus2_document():
    d = export_document(catalog.genus2_unit())
    assert d["stabilizers"] == ["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"]
    assert d["expected"] == {"k": 2, "d": 2, "m": 4}
    assert d["metadata"]["genus"] == 2
    assert list(d)[:4] == ["name", "n", "stabilizers", "logical_pairs"]


def test_whitespace_irrelevant():
    code = catalog.genus2_unit()
    compact = json.dumps(export_document(code), separators=(",", ":"))
    assert import_code(compact) == code


def test_noncommuting_cites_both():
    with pytest.raises(NonCommutingGenerators) as info:
        import_code(doc(n=1, stabilizers=["X1", "Z1"]))
    assert "X1" in str(info.value) and "Z1" in str(info.value)


def test_index_out_of_range_names_entry():
    with pytest.raises(CodeFileError, match=r"stabilizers\[1\].*X9"):
        import_code(doc(stabilizers=["Z1Z2", "X9"]))


def test_syntax_error_position():
    with pytest.raises(CodeFileError, match=r"line 2, column"):
        import_code('{"name": "t",\n "n": 6,, }')


@pytest.mark.parametrize("text, match", [
    ('[]', "JSON object"),
    ('{"n": 6, "stabilizers": []}', "name"),
    (doc(n="6"), "wrong type"),
    (doc(n=0), "positive"),
    (doc(stabilizers=[1]), r"stabilizers\[0\]"),
    (doc(logical_pairs=[{"x": "X1"}]), r"logical_pairs\[0\]"),
    (doc(logical_pairs=[{"x": "X1", "z": "Q2"}]), r"logical_pairs\[0\]"),
    (doc(expected=[2]), "expected"),
])
def test_schema_errors(text, match):
    with pytest.raises(CodeFileError, match=match):
        import_code(text)


def test_semantic_error_prefixed_with_name():
    with pytest.raises(InconsistentGenerators, match="^bad:"):
        import_code(doc(name="bad", n=2, stabilizers=["X1X2", "Z1Z2", "Y1Y2"]))


def test_anticommuting_flag_survives():
    text = export_code(catalog.genus5_unit())
    assert json.loads(text)["metadata"]["allow_anticommuting"] is True
    stripped = json.loads(text)
    del stripped["metadata"]["allow_anticommuting"]
    with pytest.raises(NonCommutingGenerators):
        import_code(json.dumps(stripped))


class TestDumps:
    def test_floats(self):
        assert dumps({"a": 0.1, "b": 1.0, "c": 1e-20}) == '{\n  "a": 0.10000000000000001,\n  "b": 1.0,\n  "c": 9.9999999999999995e-21\n}\n'

    def test_parses_back(self):
        obj = {"x": [1, 2.5, None, True, "s"], "y": {}, "z": []}
        assert json.loads(dumps(obj)) == obj

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            dumps(float("nan"))

    def test_numpy_scalars(self):
        import numpy as np

        assert dumps(np.float64(0.5)) == "0.5\n"
