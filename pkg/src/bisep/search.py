"""Counterexample search: do small extensions with the filter properties
ever fail the expected property?

The headline configuration is filter=biseparable, expect=frobenius over
F_2 at desk scale.  Candidates come from a builtin family list (and
optionally random structure constants); unital subalgebras are
enumerated from small generating subsets, canonicalized by the RREF of
their span, and deduplicated.  Conjugate subalgebras are deliberately
not identified; this is recorded as a caveat in every report.
"""

from __future__ import annotations

import multiprocessing
import random
import time

from . import algebra as alg
from . import deciders as dec
from . import linalg as la
from . import modules as mod
from . import serialize as ser
from .fields import PrimeField, Rationals, field_from_json


class SearchConfig:
    def __init__(
        self,
        field,
        max_dim_r=4,
        max_dim_s=None,
        mode="enumerate_subalgebras",
        filter_props=("biseparable",),
        expect="frobenius",
        seed=0,
        budget=dec.DEFAULT_BUDGET,
        jobs=1,
        random_trials=200,
    ):
        if max_dim_r < 1:
            raise ValueError("max_dim_r must be >= 1")
        if mode not in ("enumerate_subalgebras", "random_structure"):
            raise ValueError("unknown mode %r" % mode)
        if mode == "enumerate_subalgebras" and isinstance(field, Rationals):
            raise ValueError("enumerate mode needs a finite field")
        self.field = field
        self.max_dim_r = max_dim_r
        self.max_dim_s = max_dim_s if max_dim_s is not None else max_dim_r
        self.mode = mode
        self.filter_props = list(filter_props)
        self.expect = expect
        self.seed = seed
        self.budget = budget
        self.jobs = jobs
        self.random_trials = random_trials

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "max_dim_r": self.max_dim_r,
            "max_dim_s": self.max_dim_s,
            "mode": self.mode,
            "filter": self.filter_props,
            "expect": self.expect,
            "seed": self.seed,
            "budget": self.budget,
            "jobs": self.jobs,
        }


# ---------------------------------------------------------------------------
# candidate generation


def builtin_algebras(field, max_dim):
    """Deterministic list of (label, Algebra) with dim <= max_dim."""
    out = []

    def add(label, A):
        if A.dim <= max_dim:
            out.append((label, A))

    for n in range(1, max_dim + 1):
        add("diag%d" % n, alg.diagonal_algebra(field, n))
    for n in range(2, max_dim + 1):
        if n * n <= max_dim:
            add("m%d" % n, alg.matrix_algebra(field, n))
    add("t2", alg.upper_triangular(field, 2))
    for n in range(2, max_dim + 1):
        add("c%d" % n, alg.group_algebra(field, alg.cyclic_table(n)))
    if max_dim >= 4:
        add("v4", alg.group_algebra(field, alg.v4_table()))
    for n in range(2, max_dim + 1):
        add("nil%d" % n, _truncated_poly(field, n))
    if max_dim >= 3:
        add("nil2+k", alg.direct_sum(_truncated_poly(field, 2),
                                     alg.diagonal_algebra(field, 1)))
    if max_dim >= 4:
        add("t2+k", alg.direct_sum(alg.upper_triangular(field, 2),
                                   alg.diagonal_algebra(field, 1)))
        add("nil2+nil2", alg.direct_sum(_truncated_poly(field, 2),
                                        _truncated_poly(field, 2)))
    if isinstance(field, PrimeField):
        ext2 = _field_algebra(field, 2)
        add("fq2", ext2)
        if max_dim >= 4:
            add("fq2+k2", alg.direct_sum(ext2, alg.diagonal_algebra(field, 2)))
            add("fq2+fq2", alg.direct_sum(ext2, ext2))
            add("fq4", _field_algebra(field, 4))
            add("c%d+c%d" % (2, 2), alg.direct_sum(
                alg.group_algebra(field, alg.cyclic_table(2)),
                alg.group_algebra(field, alg.cyclic_table(2))))
            add("c3+k", alg.direct_sum(
                alg.group_algebra(field, alg.cyclic_table(3)),
                alg.diagonal_algebra(field, 1)))
    return [(lbl, A) for lbl, A in out if A is not None]


def _truncated_poly(field, n):
    """k[x]/(x^n), basis 1, x, ..., x^{n-1}."""
    z = field.zero
    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i + j < n:
                table[i][j][i + j] = field.one
    unit = la.unit_vec(field, n, 0)
    return alg.Algebra(field, table, unit,
                       basis_names=["x^%d" % i for i in range(n)])


def _field_algebra(field, k):
    """F_{p^k} viewed as a p-dimensional algebra over F_p."""
    from .fields import ExtField

    big = ExtField(field.p, k)
    basis = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    table = [[list(big.mul(a, b)) for b in basis] for a in basis]
    return alg.Algebra(field, table, list(big.one))


def random_algebra(field, dim, rng):
    """One random associative unital table, or None if the draw fails."""
    els = list(field.elements())
    n = dim
    table = [[[rng.choice(els) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    # force e_0 to be the unit to boost the acceptance rate
    for j in range(n):
        for k in range(n):
            table[0][j][k] = field.one if j == k else field.zero
            table[j][0][k] = field.one if j == k else field.zero
    try:
        return alg.Algebra(field, table, la.unit_vec(field, n, 0))
    except alg.AlgebraError:
        return None


def enumerate_subalgebras(A, max_dim_s):
    """Distinct unital subalgebras generated by <= 2 elements, as RREF bases."""
    f = A.field
    elements = list(A.elements())
    seen = {}
    singles = [()]
    singles += [(e,) for e in elements]
    pairs = [(a, b) for i, a in enumerate(elements) for b in elements[i + 1:]]
    for gens in singles + pairs:
        basis = alg.subalgebra_closure(A, [list(g) for g in gens])
        if len(basis) > max_dim_s:
            continue
        key = tuple(tuple(x) for x in basis)
        if key not in seen:
            seen[key] = basis
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# evaluation


def evaluate_candidate(task):
    """Filter conjunction, then the expectation.  Runs in worker processes."""
    ext_json, filter_props, expect, budget = task
    ext = ser.extension_from_json(ext_json)
    verdicts = {}
    for p in filter_props:
        out = dec.decide_property(ext, p, budget)
        verdicts[p] = out.verdict
        if out.verdict != dec.TRUE:
            return {"status": "filtered", "verdicts": verdicts}
    out = dec.decide_property(ext, expect, budget)
    verdicts[expect] = out.verdict
    if out.verdict == dec.TRUE:
        return {"status": "pass", "verdicts": verdicts}
    if out.verdict == dec.UNKNOWN:
        return {"status": "unknown", "verdicts": verdicts}
    report = dec.property_report(
        ext, filter_props + [expect], budget, witnesses=True, timing=False
    )
    return {
        "status": "violation",
        "verdicts": verdicts,
        "instance": ext_json,
        "report": report,
    }


def run_search(config):
    t0 = time.monotonic()
    f = config.field
    tasks = []
    labels = []
    generated = 0
    accepted = 0
    budget_exhausted = False

    def add_ext(label, ext):
        tasks.append(
            (
                ser.extension_to_json(ext),
                config.filter_props,
                config.expect,
                config.budget,
            )
        )
        labels.append(label)

    if config.mode == "enumerate_subalgebras":
        # walk nested pairs S <= R of unital subalgebras of each parent
        for lbl, A in builtin_algebras(f, config.max_dim_r):
            if f.size ** A.dim > config.budget:
                budget_exhausted = True
                continue
            subs = enumerate_subalgebras(A, A.dim)
            full = la.span_rref(f, la.identity(f, A.dim))
            if tuple(tuple(x) for x in full) not in {
                tuple(tuple(x) for x in b) for b in subs
            }:
                subs.append(full)
            for b2 in subs:
                if len(b2) > config.max_dim_r:
                    continue
                R, _ = alg.subalgebra(A, b2)
                cs = la.CoordSystem(f, b2)
                for b1 in subs:
                    if len(b1) > min(len(b2), config.max_dim_s):
                        continue
                    if not all(la.in_span(f, b2, v) for v in b1):
                        continue
                    if len(tasks) >= config.budget:
                        budget_exhausted = True
                        break
                    S, _ = alg.subalgebra(A, b1)
                    iota = la.transpose([cs.express(list(v)) for v in b1])
                    add_ext(
                        "%s[%d<=%d]" % (lbl, S.dim, R.dim),
                        mod.Extension(S, R, iota),
                    )
    else:
        rng = random.Random(config.seed)
        for _ in range(config.random_trials):
            generated += 1
            dim = rng.randint(2, config.max_dim_r)
            A = random_algebra(f, dim, rng)
            if A is None:
                continue
            accepted += 1
            subs = enumerate_subalgebras(A, config.max_dim_s)
            if subs:
                pick = subs[rng.randrange(len(subs))]
                S, iota = alg.subalgebra(A, pick)
                add_ext("rand%d" % accepted, mod.Extension(S, A, iota))
            if len(tasks) >= config.budget:
                budget_exhausted = True
                break

    if config.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(config.jobs) as pool:
            results = pool.map(evaluate_candidate, tasks)
    else:
        results = [evaluate_candidate(t) for t in tasks]

    hits = sum(1 for r in results if r["status"] in ("pass", "violation"))
    unknowns = sum(1 for r in results if r["status"] == "unknown")
    violations = [
        {"label": lbl, "instance": r["instance"], "report": r["report"]}
        for lbl, r in zip(labels, results)
        if r["status"] == "violation"
    ]
    violations.sort(key=lambda v: ser.dumps_canonical(v["instance"]))
    report = {
        "config": config.to_json(),
        "candidates": len(tasks),
        "filter_hits": hits,
        "violations": violations,
        "unknowns": unknowns,
        "seed": config.seed,
        "budget_exhausted": budget_exhausted,
        "caveats": ["subalgebras are deduplicated by span, not up to conjugacy"],
        "wall_ms": int((time.monotonic() - t0) * 1000),
    }
    if config.mode == "random_structure":
        report["random_acceptance_rate"] = (
            round(accepted / generated, 4) if generated else 0.0
        )
    return report
