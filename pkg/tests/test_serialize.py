import json

import pytest

from bisep import algebra as alg
from bisep import catalog
from bisep import serialize as ser
from bisep.fields import F2, F3, QQ


def test_algebra_roundtrip():
    for A in (
        alg.matrix_algebra(F2, 2),
        alg.upper_triangular(F3, 2),
        alg.diagonal_algebra(QQ, 3),
    ):
        B = ser.algebra_from_json(ser.algebra_to_json(A))
        assert B.table == A.table
        assert B.unit == A.unit
        assert B.field == A.field


def test_extension_roundtrip():
    ext = catalog.build("matrix_over_triangular")
    d = ser.extension_to_json(ext)
    ext2 = ser.extension_from_json(d)
    assert ext2.iota == ext.iota
    assert ext2.R.table == ext.R.table
    assert ext2.S.table == ext.S.table


def test_bimodule_roundtrip():
    M = catalog.build("morita_bimodule")
    d = ser.bimodule_to_json(M)
    M2 = ser.bimodule_from_json(d)
    assert M2.left == M.left
    assert M2.right == M.right
    assert M2.dim == M.dim


def test_subject_dispatch(tmp_path):
    ext = catalog.build("z2z2_over_z2")
    p = tmp_path / "ext.json"
    p.write_text(json.dumps(ser.extension_to_json(ext)))
    loaded = ser.load_subject(str(p))
    assert loaded.iota == ext.iota
    M = catalog.build("morita_bimodule")
    p2 = tmp_path / "bim.json"
    p2.write_text(json.dumps(ser.bimodule_to_json(M)))
    loaded2 = ser.load_subject(str(p2))
    assert loaded2.dim == M.dim


def test_bad_json_reports_errors():
    with pytest.raises(ser.SerializationError):
        ser.subject_from_json({"foo": 1})
    with pytest.raises(ser.SerializationError):
        ser.subject_from_json([1, 2, 3])
    ext = catalog.build("z2z2_over_z2")
    d = ser.extension_to_json(ext)
    d["iota"] = [[0, 0]]  # wrong shape
    with pytest.raises(ser.SerializationError):
        ser.extension_from_json(d)


def test_rational_scalars_in_json():
    A = alg.diagonal_algebra(QQ, 2)
    d = ser.algebra_to_json(A)
    for _, _, _, v in d["structure"]:
        assert isinstance(v, str)
    assert ser.algebra_from_json(d).table == A.table


def test_dumps_canonical_deterministic():
    ext = catalog.build("z2z2_over_z2")
    d = ser.extension_to_json(ext)
    assert ser.dumps_canonical(d) == ser.dumps_canonical(
        json.loads(json.dumps(d))
    )
