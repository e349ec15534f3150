import json
import subprocess
import sys

from bisep import catalog
from bisep import cli
from bisep import serialize as ser


def run_cli(args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "bisep.cli"] + args,
        capture_output=True, text=True, env=full_env,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_check_catalog_json():
    code, out, _ = run_cli(
        ["check", "--catalog", "z2z2_over_z2",
         "--props", "split,separable,frobenius", "--witnesses", "--no-timing"]
    )
    assert code == 0
    rep = json.loads(out)
    for p in ("split", "separable", "frobenius"):
        assert rep["properties"][p]["verdict"] == "true"
        assert "witness" in rep["properties"][p]


def test_check_qf_false():
    code, out, _ = run_cli(
        ["check", "--catalog", "matrix_over_triangular", "--props", "qf",
         "--no-timing"]
    )
    assert code == 0
    assert json.loads(out)["properties"]["qf"]["verdict"] == "false"


def test_check_identity_file_input(tmp_path):
    ext = catalog.build("identity_ext", algebra="k")
    p = tmp_path / "ext.json"
    p.write_text(json.dumps(ser.extension_to_json(ext)))
    code, out, _ = run_cli(
        ["check", "--input", str(p), "--props", "separable", "--witnesses",
         "--no-timing"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["properties"]["separable"]["verdict"] == "true"
    # R = S: the separability element is 1 (x) 1
    assert rep["properties"]["separable"]["witness"]["element"] == [1]


def test_check_input_errors_exit_2(tmp_path):
    code, out, _ = run_cli(["check", "--input", "/does/not/exist.json"])
    assert code == 2
    assert "error" in json.loads(out)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, _ = run_cli(["check", "--input", str(bad)])
    assert code == 2
    assert "error" in json.loads(out)
    code, out, _ = run_cli(["check", "--catalog", "nope"])
    assert code == 2
    code, out, _ = run_cli(
        ["check", "--catalog", "z2z2_over_z2", "--props", "bogus"])
    assert code == 2


def test_catalog_list_and_emit_roundtrip(tmp_path):
    code, out, _ = run_cli(["catalog", "list", "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert any(r["name"] == "morita_bimodule" for r in rows)
    code, out, _ = run_cli(["catalog", "emit", "z2z2_over_z2"])
    assert code == 0
    p = tmp_path / "emitted.json"
    p.write_text(out)
    code, out, _ = run_cli(
        ["check", "--input", str(p), "--props", "frobenius", "--no-timing"])
    assert code == 0
    assert json.loads(out)["properties"]["frobenius"]["verdict"] == "true"


def test_search_cli_violation_exit_1():
    code, out, _ = run_cli(
        ["search", "--field", "f2", "--max-dim-r", "2", "--filter", "frobenius",
         "--expect", "separable", "--no-timing"]
    )
    assert code == 1
    rep = json.loads(out)
    assert rep["violations"]


def test_search_cli_no_timing_deterministic():
    args = ["search", "--field", "f2", "--max-dim-r", "2", "--no-timing"]
    _, out1, _ = run_cli(args)
    _, out2, _ = run_cli(args)
    assert out1 == out2


def test_budget_env_var():
    code, out, _ = run_cli(
        ["check", "--catalog", "z2z2_over_z2", "--props", "split",
         "--no-timing"],
        env={"BISEP_BUDGET": "1000000"},
    )
    assert code == 0


def test_bad_field_spec_exit_2():
    code, out, _ = run_cli(["search", "--field", "f6"])
    assert code == 2


def test_cmd_verify_paper_negative_path(monkeypatch, capsys):
    # mutate one structure constant of the z2z2 entry: the diagonal algebra
    # becomes the group algebra F_2[C_2] and the separability claim fails
    import bisep.algebra as alg
    import bisep.linalg as la
    import bisep.modules as mod
    from bisep.fields import F2

    def mutated(**_):
        R = alg.group_algebra(F2, alg.cyclic_table(2))
        S, iota = alg.subalgebra(R, [la.unit_vec(F2, 2, 0)])
        return mod.Extension(S, R, iota)

    import bisep.verify as verifymod

    entry = catalog.ENTRIES["z2z2_over_z2"]
    monkeypatch.setattr(entry, "_builder", mutated)
    monkeypatch.setattr(
        verifymod, "CHECKS",
        [c for c in verifymod.CHECKS if c[0] == "z2z2_over_z2 claims"])

    class Args:
        json = False
        plots = None

    code = cli.cmd_verify_paper(Args())
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL  z2z2_over_z2 claims" in out
    assert "separable" in out  # the failed claim is named
