import copy

from bisep import deciders as dec
from bisep import search as searchmod
from bisep import serialize as ser
from bisep.fields import F2


def small_config(**kw):
    base = dict(max_dim_r=3, filter_props=["frobenius"], expect="separable",
                seed=0, jobs=1)
    base.update(kw)
    return searchmod.SearchConfig(F2, **base)


def strip_timing(report):
    r = copy.deepcopy(report)
    r.pop("wall_ms", None)
    r["config"].pop("jobs", None)
    return r


def test_serial_parallel_identical():
    serial = searchmod.run_search(small_config(jobs=1))
    parallel = searchmod.run_search(small_config(jobs=2))
    assert ser.dumps_canonical(strip_timing(serial)) == ser.dumps_canonical(
        strip_timing(parallel)
    )


def test_violations_reverify_from_serialized_instance():
    report = searchmod.run_search(small_config())
    assert report["violations"], "frobenius-not-separable instances must exist"
    for v in report["violations"][:3]:
        ext = ser.extension_from_json(v["instance"])
        assert dec.decide_property(ext, "frobenius").is_true
        assert dec.decide_property(ext, "separable").is_false


def test_headline_search_shape():
    report = searchmod.run_search(
        searchmod.SearchConfig(F2, max_dim_r=3, filter_props=["biseparable"],
                               expect="frobenius")
    )
    assert report["violations"] == []
    assert report["filter_hits"] > 0
    assert report["caveats"]
    assert not report["budget_exhausted"]


def test_random_mode_deterministic_and_reports_rate():
    cfg = dict(mode="random_structure", random_trials=60, seed=42)
    a = searchmod.run_search(small_config(**cfg))
    b = searchmod.run_search(small_config(**cfg))
    assert ser.dumps_canonical(strip_timing(a)) == ser.dumps_canonical(
        strip_timing(b)
    )
    assert 0.0 < a["random_acceptance_rate"] <= 1.0


def test_subalgebra_enumeration_dedupes():
    import bisep.algebra as alg

    A = alg.diagonal_algebra(F2, 3)
    subs = searchmod.enumerate_subalgebras(A, 3)
    keys = [tuple(tuple(r) for r in b) for b in subs]
    assert len(keys) == len(set(keys))
    # the unital line span{1} is always present
    assert any(len(b) == 1 for b in subs)
