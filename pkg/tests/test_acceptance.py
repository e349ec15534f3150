"""The acceptance suite: one test per headline criterion.

Each test delegates to the shared verification runners in bisep.verify
(the same code the `verify-paper` CLI command runs) and prints a
pass/fail line, so `pytest -v -s` doubles as a human-readable report.
"""

import subprocess
import sys
import time

from bisep import verify


def _run(name, fn, limit_s=None):
    t0 = time.monotonic()
    ok, detail = fn()
    dt = time.monotonic() - t0
    print("%s  %-42s %6.1fs  %s" % ("PASS" if ok else "FAIL", name, dt, detail))
    assert ok, "%s: %s" % (name, detail)
    if limit_s is not None:
        assert dt < limit_s, "%s took %.1fs (limit %ds)" % (name, dt, limit_s)


def test_criterion_01_z2z2():
    # split/separable/Frobenius, exactly 2 projections, exactly 1 Frobenius
    # homomorphism, and no projection equals the Frobenius homomorphism
    _run("1 z2z2_over_z2", verify.check_z2z2, limit_s=1)


def test_criterion_02_matrix_over_triangular():
    # fgp + H-separable (hence separable) but not Frobenius, not QF on
    # either side, and not beta-Frobenius for any automorphism of T_2
    _run("2 matrix over triangular", verify.check_matrix_over_triangular,
         limit_s=10)


def test_criterion_03_triangular_over_diagonal():
    # split fgp but neither separable nor Frobenius, over F_2 and Q;
    # T_2 itself is not a QF ring
    _run("3 triangular over diagonal", verify.check_triangular_over_diagonal,
         limit_s=5)


def test_criterion_04_group_pairs():
    # k[G]/k[H] split Frobenius always; separable iff char does not
    # divide the index
    _run("4 group pairs", verify.check_group_pairs, limit_s=10)


def test_criterion_05_prop_1_3():
    # separability transfers between R/S and the trivial extensions
    # (R + I)/(S + I) on 50 random instances
    _run("5 Prop 1.3", verify.check_prop_1_3)


def test_criterion_06_prop_1_1_cor_1_2():
    # split separable ring epis have idempotent kernel; nilpotent
    # kernels are forced to zero
    _run("6 Prop 1.1 / Cor 1.2", verify.check_prop_1_1_cor_1_2)


def test_criterion_07_cross_deciders():
    # the Sec. 5 criteria agree with the direct definitions on the
    # catalog plus 100 random extensions over F_2
    _run("7 cross-decider equalities", verify.check_cross_deciders)


def test_criterion_08_implication_lattice():
    # no instance violates the implication lattice; Thm 3.8 and
    # Prop 3.6 consequences hold on every biseparable instance
    _run("8 implication lattice", verify.check_implication_lattice)


def test_criterion_09_oracles():
    # trace-ideal in_add vs Krull-Schmidt summand decomposition on all
    # modules of dim <= 3; deciders vs exhaustive element/map search
    t0 = time.monotonic()
    _run("9a in_add summand oracle", verify.check_in_add_oracle)
    _run("9b separability/split exhaustion", verify.check_separability_oracle)
    assert time.monotonic() - t0 < 300


def test_criterion_10_title_search():
    # F_2, dim R <= 4, filter biseparable, expect frobenius:
    # 0 violations, >= 100 biseparable instances examined
    _run("10 title problem search", verify.check_title_search, limit_s=1800)


def test_criterion_11_verify_paper_cli():
    proc = subprocess.run(
        [sys.executable, "-m", "bisep.cli", "verify-paper"],
        capture_output=True, text=True,
    )
    print(proc.stdout)
    assert proc.returncode == 0
    lines = [l for l in proc.stdout.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == len(verify.CHECKS)
    assert all(l.startswith("PASS") for l in lines)
