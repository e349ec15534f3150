"""JSON (de)serialization for algebras, extensions and bimodules.

Structure constants are stored as sparse [i, j, k, value] quadruples;
scalars follow the field's own JSON convention ("num/den" strings over
Q, ints over F_p, coefficient lists over F_{p^k}).
"""

from __future__ import annotations

import json

from . import linalg as la
from .algebra import Algebra
from .fields import field_from_json
from .modules import Bimodule, Extension, ModuleError


class SerializationError(Exception):
    pass


def algebra_to_json(A):
    f = A.field
    structure = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in enumerate(A.table[i][j]):
                if c != f.zero:
                    structure.append([i, j, k, f.scalar_to_json(c)])
    return {
        "field": f.to_json(),
        "dim": A.dim,
        "basis_names": list(A.basis_names),
        "unit": [f.scalar_to_json(x) for x in A.unit],
        "structure": structure,
    }


def algebra_from_json(d, field=None):
    try:
        f = field if field is not None else field_from_json(d["field"])
        n = int(d["dim"])
        table = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, v in d["structure"]:
            table[i][j][k] = f.scalar_from_json(v)
        unit = [f.scalar_from_json(x) for x in d["unit"]]
        names = d.get("basis_names")
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise SerializationError("bad algebra JSON: %s" % exc)
    return Algebra(f, table, unit, basis_names=names)


def matrix_to_json(field, A):
    return [[field.scalar_to_json(x) for x in row] for row in A]


def matrix_from_json(field, rows):
    return [[field.scalar_from_json(x) for x in row] for row in rows]


def extension_to_json(ext):
    f = ext.R.field
    # iota stored column-major: entry j is the image of s_j in R
    cols = la.transpose(ext.iota)
    return {
        "S": algebra_to_json(ext.S),
        "R": algebra_to_json(ext.R),
        "iota": [[f.scalar_to_json(x) for x in col] for col in cols],
    }


def extension_from_json(d):
    try:
        S = algebra_from_json(d["S"])
        R = algebra_from_json(d["R"], field=S.field)
        f = R.field
        cols = [[f.scalar_from_json(x) for x in col] for col in d["iota"]]
    except (KeyError, TypeError) as exc:
        raise SerializationError("bad extension JSON: %s" % exc)
    if len(cols) != S.dim or any(len(c) != R.dim for c in cols):
        raise SerializationError("iota must have dim S columns of length dim R")
    try:
        return Extension(S, R, la.transpose(cols))
    except ModuleError as exc:
        raise SerializationError("invalid extension: %s" % exc)


def bimodule_to_json(M):
    f = M.field
    return {
        "T": algebra_to_json(M.T),
        "R": algebra_to_json(M.R),
        "dim": M.dim,
        "left": [matrix_to_json(f, A) for A in M.left],
        "right": [matrix_to_json(f, B) for B in M.right],
    }


def bimodule_from_json(d):
    try:
        T = algebra_from_json(d["T"])
        R = algebra_from_json(d["R"], field=T.field)
        f = T.field
        dim = int(d["dim"])
        left = [matrix_from_json(f, A) for A in d["left"]]
        right = [matrix_from_json(f, B) for B in d["right"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializationError("bad bimodule JSON: %s" % exc)
    try:
        return Bimodule(T, R, dim, left, right)
    except ModuleError as exc:
        raise SerializationError("invalid bimodule: %s" % exc)


def load_subject(path):
    """Read an extension or bimodule from a JSON file."""
    with open(path) as fh:
        d = json.load(fh)
    return subject_from_json(d)


def subject_from_json(d):
    if not isinstance(d, dict):
        raise SerializationError("top-level JSON must be an object")
    if "iota" in d:
        return extension_from_json(d)
    if "left" in d and "right" in d:
        return bimodule_from_json(d)
    raise SerializationError("JSON is neither an extension nor a bimodule")


def dumps_canonical(obj):
    """Deterministic JSON text (sorted keys, no whitespace drift)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
