"""Catalog of worked examples and counterexamples.

Each entry builds an Extension or Bimodule together with the property
vector claimed for it in Caenepeel & Kadison, "Are biseparable
extensions Frobenius?" (Beitraege Algebra Geom. 2001).  Expected maps
only list properties the source explicitly claims; everything else is
left to the deciders.
"""

from __future__ import annotations

from . import algebra as alg
from . import linalg as la
from . import modules as mod
from .fields import ExtField, PrimeField, QQ, Rationals


class UnknownEntry(Exception):
    pass


class BadParams(Exception):
    pass


class CatalogEntry:
    def __init__(self, name, kind, anchor, description, defaults, builder, expected):
        self.name = name
        self.kind = kind  # "extension" | "bimodule"
        self.anchor = anchor
        self.description = description
        self.defaults = defaults
        self._builder = builder
        self._expected = expected

    def build(self, **params):
        p = dict(self.defaults)
        p.update(params)
        return self._builder(**p)

    def expected(self, **params):
        p = dict(self.defaults)
        p.update(params)
        return self._expected(**p)


def _field_of(p):
    if p == 0:
        return QQ
    return PrimeField(p)


def _sub_ext(R, basis):
    S, iota = alg.subalgebra(R, basis)
    return mod.Extension(S, R, iota)


# ---------------------------------------------------------------------------
# builders


def _build_z2z2(**_):
    R = alg.diagonal_algebra(PrimeField(2), 2)
    return _sub_ext(R, [[1, 1]])


def _build_matrix_over_triangular(n=2, p=2):
    if n < 2:
        raise BadParams("n must be >= 2")
    f = _field_of(p)
    R = alg.matrix_algebra(f, n)
    basis = []
    for r in range(n):
        for s in range(r, n):
            basis.append(la.unit_vec(f, n * n, r * n + s))
    return _sub_ext(R, basis)


def _build_triangular_over_diagonal(n=2, p=2):
    if n < 2:
        raise BadParams("n must be >= 2")
    f = _field_of(p)
    R = alg.upper_triangular(f, n)
    dim = R.dim
    basis = []
    idx = 0
    for r in range(n):
        for s in range(r, n):
            if r == s:
                basis.append(la.unit_vec(f, dim, idx))
            idx += 1
    return _sub_ext(R, basis)


GROUP_TABLES = {
    "c2": lambda: alg.cyclic_table(2),
    "c3": lambda: alg.cyclic_table(3),
    "c4": lambda: alg.cyclic_table(4),
    "c6": lambda: alg.cyclic_table(6),
    "v4": alg.v4_table,
    "s3": alg.s3_table,
    "d4": alg.d4_table,
}


def _subgroup_check(table, subgroup):
    sub = sorted(set(subgroup))
    e = alg.validate_cayley_table(table)
    if e not in sub:
        raise BadParams("subgroup must contain the identity")
    for a in sub:
        for b in sub:
            if table[a][b] not in sub:
                raise BadParams("subgroup indices are not closed")
    return sub


def _build_group_pair(group="c2", subgroup=(0,), p=3):
    if group not in GROUP_TABLES:
        raise BadParams("unknown group %r" % group)
    table = GROUP_TABLES[group]()
    sub = _subgroup_check(table, list(subgroup))
    f = _field_of(p)
    R = alg.group_algebra(f, table)
    basis = [la.unit_vec(f, len(table), i) for i in sub]
    return _sub_ext(R, basis)


def _build_morita_bimodule(n=2, p=2):
    f = _field_of(p)
    T = alg.matrix_algebra(f, n)
    k = alg.Algebra(f, [[[f.one]]], [f.one], basis_names=["1"])
    left = []
    for r in range(n):
        for s in range(n):
            m = la.zeros(f, n, n)
            m[r][s] = f.one
            left.append(m)
    right = [la.identity(f, n)]
    return mod.Bimodule(T, k, n, left, right)


def _build_trivial_ext_pair(p=2, **_):
    # T_2 over its diagonal, extended by the nilpotent ideal span{E12}
    f = _field_of(p)
    base = _build_triangular_over_diagonal(2, p)
    R = base.R
    ideal = [[f.zero, f.one, f.zero]]
    acts = alg.ideal_as_bimodule(R, ideal)
    A = alg.trivial_extension(R, *acts)
    tbasis = []
    for col in base.embedded_basis():
        tbasis.append(list(col) + [f.zero])
    tbasis.append([f.zero] * R.dim + [f.one])
    return _sub_ext(A, tbasis)


def _build_identity_ext(algebra="m2", p=2, **_):
    f = _field_of(p)
    builders = {
        "m2": lambda: alg.matrix_algebra(f, 2),
        "t2": lambda: alg.upper_triangular(f, 2),
        "diag2": lambda: alg.diagonal_algebra(f, 2),
        "k": lambda: alg.Algebra(f, [[[f.one]]], [f.one]),
    }
    if algebra not in builders:
        raise BadParams("unknown algebra %r" % algebra)
    return mod.identity_extension(builders[algebra]())


def _build_field_ext(p=2, k=2):
    big = ExtField(p, k)
    f = PrimeField(p)
    basis = []
    for i in range(k):
        x_i = tuple(1 if j == i else 0 for j in range(k))
        basis.append(x_i)
    table = []
    for a in basis:
        row = []
        for b in basis:
            row.append(list(big.mul(a, b)))
        table.append(row)
    R = alg.Algebra(f, table, list(big.one), basis_names=["x^%d" % i for i in range(k)])
    return _sub_ext(R, [la.unit_vec(f, k, 0)])


# ---------------------------------------------------------------------------
# expected property vectors (source-claimed only)


def _exp_z2z2(**_):
    return {
        "split": "true",
        "separable": "true",
        "frobenius": "true",
        "fgp_left": "true",
        "fgp_right": "true",
        "projection_count": 2,
        "frobenius_hom_count": 1,
    }


def _exp_matrix_over_triangular(**_):
    return {
        "separable": "true",
        "h_separable": "true",
        "fgp_left": "true",
        "fgp_right": "true",
        "frobenius": "false",
        "qf_left": "false",
        "qf_right": "false",
    }


def _exp_triangular_over_diagonal(**_):
    return {
        "split": "true",
        "fgp_left": "true",
        "fgp_right": "true",
        "frobenius": "false",
        "separable": "false",
    }


def _exp_group_pair(group="c2", subgroup=(0,), p=3):
    table = GROUP_TABLES[group]()
    index = len(table) // len(set(subgroup))
    out = {"split": "true", "frobenius": "true"}
    if p == 0 or index % p != 0:
        out["separable"] = "true"
    else:
        out["separable"] = "false"
    return out


def _exp_morita(**_):
    return {
        "separable_bimodule": "true",
        "frobenius_bimodule": "true",
        "fgp_left": "true",
        "fgp_right": "true",
    }


def _exp_trivial_ext_pair(p=2, **_):
    # Prop 1.3: separable(A/T) = separable(R/S); the base here is not separable
    return {"separable": "false"}


def _exp_all_true(**_):
    return {
        "split": "true",
        "separable": "true",
        "frobenius": "true",
        "fgp_left": "true",
        "fgp_right": "true",
        "qf_left": "true",
        "qf_right": "true",
        "h_separable": "true",
        "centrally_projective": "true",
        "biseparable": "true",
    }


def _exp_field_ext(**_):
    return {"split": "true", "separable": "true", "frobenius": "true"}


ENTRIES = {}


def _register(name, kind, anchor, description, defaults, builder, expected):
    ENTRIES[name] = CatalogEntry(
        name, kind, anchor, description, defaults, builder, expected
    )


_register(
    "z2z2_over_z2",
    "extension",
    "Caenepeel-Kadison Sec. 4",
    "Z_2 x Z_2 over the diagonal copy of Z_2: split, separable and "
    "Frobenius with exactly two bimodule projections and a unique "
    "Frobenius homomorphism",
    {},
    _build_z2z2,
    _exp_z2z2,
)
_register(
    "matrix_over_triangular",
    "extension",
    "Caenepeel-Kadison Sec. 4",
    "M_n over the upper triangular algebra: f.g. projective H-separable "
    "but not even twisted QF",
    {"n": 2, "p": 2},
    _build_matrix_over_triangular,
    _exp_matrix_over_triangular,
)
_register(
    "triangular_over_diagonal",
    "extension",
    "Caenepeel-Kadison Sec. 4",
    "Upper triangular T_n over its diagonal: split two-sided f.g. "
    "projective but not Frobenius",
    {"n": 2, "p": 2},
    _build_triangular_over_diagonal,
    _exp_triangular_over_diagonal,
)
_register(
    "group_pair",
    "extension",
    "Caenepeel-Kadison Sec. 3, item 2",
    "Group algebra pair k[G]/k[H]: always split Frobenius; separable "
    "iff the characteristic does not divide the index",
    {"group": "c2", "subgroup": (0,), "p": 3},
    _build_group_pair,
    _exp_group_pair,
)
_register(
    "morita_bimodule",
    "bimodule",
    "Caenepeel-Kadison Sec. 2",
    "k^n linking M_n(k) and k: a Morita bimodule, hence biseparable "
    "and Frobenius",
    {"n": 2, "p": 2},
    _build_morita_bimodule,
    _exp_morita,
)
_register(
    "trivial_ext_pair",
    "extension",
    "Caenepeel-Kadison Sec. 1, Prop. 1.3",
    "R + I over S + I for a multiplicative R-bimodule I: separable "
    "exactly when the base extension is",
    {"p": 2},
    _build_trivial_ext_pair,
    _exp_trivial_ext_pair,
)
_register(
    "identity_ext",
    "extension",
    "trivial case",
    "R over itself: every property holds",
    {"algebra": "m2", "p": 2},
    _build_identity_ext,
    _exp_all_true,
)
_register(
    "field_ext",
    "extension",
    "Caenepeel-Kadison Sec. 3, item 1",
    "F_{p^k} over F_p: split separable Frobenius (finite fields are "
    "separable extensions)",
    {"p": 2, "k": 2},
    _build_field_ext,
    _exp_field_ext,
)


def names():
    return sorted(ENTRIES)


def get(name):
    if name not in ENTRIES:
        raise UnknownEntry("no catalog entry named %r" % name)
    return ENTRIES[name]


def build(name, **params):
    return get(name).build(**params)


def expected(name, **params):
    return get(name).expected(**params)
