import math

import tvo
from tvo.cli import fmt_value, main, resolve_builtin_data


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def machine_value(out):
    """Parse the last non-comment stdout line as a complex value."""
    lines = [l for l in out.strip().splitlines() if l and not l.startswith("#")]
    re_, im = lines[-1].split()
    return complex(float(re_), float(im))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_toric_code_passes(capsys):
    code, out, _ = run(capsys, "verify", "--data", "builtin:toric-code")
    assert code == 0
    assert "PASS (strict)" in out


def test_verify_fibonacci_fails_strict_with_anomaly(capsys):
    code, out, _ = run(capsys, "verify", "--data", "builtin:fibonacci")
    assert code == 1
    assert "anomaly phase" in out
    assert "-0.587785252292" in out


def test_verify_missing_file_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--data", "missing.dat")
    assert code == 2
    assert "missing.dat" in err


# ---------------------------------------------------------------------------
# invariant
# ---------------------------------------------------------------------------

def test_invariant_lens_toric(capsys):
    code, out, _ = run(capsys, "invariant", "lens", "-p", "3", "-q", "1",
                       "--data", "builtin:toric-code")
    assert code == 0
    assert "0.500000000000 0.000000000000" in out


def test_invariant_lens_machine_line_parses_back(capsys):
    code, out, _ = run(capsys, "invariant", "lens", "-p", "7", "-q", "3",
                       "--data", "builtin:dw-z3")
    assert code == 0
    value = machine_value(out)
    assert abs(value - tvo.lens_general(resolve_builtin_data("dw-z3"), 7, 3).value) < 1e-12


def test_invariant_brieskorn(capsys):
    code, out, _ = run(capsys, "invariant", "brieskorn", "-p", "2", "-q", "3", "-r", "5",
                       "--data", "builtin:toric-code")
    assert code == 0
    assert abs(machine_value(out) - 0.5) < 1e-12


def test_invariant_gcd_violation_exit2(capsys):
    code, _, err = run(capsys, "invariant", "lens", "-p", "4", "-q", "2",
                       "--data", "builtin:toric-code")
    assert code == 2
    assert "gcd" in err


def test_invariant_plumbing_tree_file(capsys, tmp_path):
    tree = tmp_path / "star.tree"
    tree.write_text(
        "vertex 0 1\nvertex 1 2\nvertex 2 3\nvertex 3 5\n"
        "edge 0 1\nedge 0 2\nedge 0 3\n"
    )
    code, out, _ = run(capsys, "invariant", "plumbing", "--tree", str(tree),
                       "--data", "builtin:toric-code")
    assert code == 0
    assert abs(machine_value(out) - 0.5) < 1e-12


def test_invariant_anomalous_data_warns_on_stderr(capsys):
    code, out, err = run(capsys, "invariant", "lens", "-p", "3", "-q", "1",
                         "--data", "builtin:fibonacci")
    assert code == 0
    assert "anomaly" in err


# ---------------------------------------------------------------------------
# statesum
# ---------------------------------------------------------------------------

def test_statesum_builtin_sphere(capsys):
    code, out, _ = run(capsys, "statesum", "--sixj", "builtin:vec-z2", "--tri", "builtin:s3")
    assert code == 0
    assert abs(machine_value(out) - 0.5) < 1e-9


def test_statesum_trivial_labels(capsys):
    code, out, _ = run(capsys, "statesum", "--sixj", "builtin:vec-z1", "--tri", "builtin:s3")
    assert code == 0
    assert abs(machine_value(out) - 1.0) < 1e-12


def test_statesum_file_and_twist(capsys, tmp_path):
    path = tmp_path / "s3.tri"
    tvo.save_triangulation(tvo.boundary_4_simplex(), path)
    code, out, _ = run(capsys, "statesum", "--sixj", "builtin:vec-z3-2", "--tri", str(path))
    assert code == 0
    assert abs(machine_value(out) - 1 / 3) < 1e-9


def test_statesum_corrupt_triangulation_exit2(capsys, tmp_path):
    path = tmp_path / "bad.tri"
    path.write_text(
        "tets 2\nglue 0 0 1 0 1 2 3\nglue 1 0 0 0 2 1 3\n"
        "glue 0 1 1 1 0 2 3\nglue 0 2 1 2 0 1 3\nglue 0 3 1 3 0 1 2\n"
    )
    code, _, err = run(capsys, "statesum", "--sixj", "builtin:vec-z2", "--tri", str(path))
    assert code == 2
    assert "involution" in err


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

def test_compare_toric_conjugate_identity(capsys):
    code, out, _ = run(capsys, "compare", "--a", "builtin:toric-code",
                       "--b", "builtin:toric-code", "--conjugate")
    assert code == 0
    perm_line = [l for l in out.splitlines() if not l.startswith("#")][-1]
    assert perm_line.split() == ["0", "1", "2", "3"]


def test_compare_rank_mismatch_exit1(capsys):
    code, out, _ = run(capsys, "compare", "--a", "builtin:fibonacci", "--b", "builtin:ising")
    assert code == 1
    assert "no equivalence" in out


def test_compare_file_with_saved_conjugate(capsys, tmp_path):
    d = tvo.twisted_double_cyclic(3, 1)
    a = tmp_path / "a.dat"
    b = tmp_path / "b.dat"
    tvo.save_modular_file(d, a)
    tvo.save_modular_file(d.conjugate(), b)
    code, out, _ = run(capsys, "compare", "--a", str(a), "--b", str(b), "--conjugate")
    assert code == 0


def test_compare_tube_against_twisted(capsys):
    code, _, _ = run(capsys, "compare", "--a", "builtin:tube-z3-1",
                     "--b", "builtin:twisted-z3-1")
    assert code == 0


# ---------------------------------------------------------------------------
# golden
# ---------------------------------------------------------------------------

def test_golden_wrong_data_fails(capsys):
    code, out, _ = run(capsys, "golden", "--data", "builtin:toric-code",
                       "--source", "haagerup")
    assert code == 1
    assert "FAIL" in out


def test_golden_e6_self_consistency(capsys):
    code, out, _ = run(capsys, "golden", "--source", "e6")
    assert code == 0
    assert "closed form" in out


def test_golden_other_source_requires_data(capsys):
    code, _, err = run(capsys, "golden", "--source", "haagerup")
    assert code == 2
    assert "requires --data" in err


# ---------------------------------------------------------------------------
# builtins and misc
# ---------------------------------------------------------------------------

def test_list_builtins_flag(capsys):
    code, out, _ = run(capsys, "--list-builtins")
    assert code == 0
    for name in ("fibonacci", "toric-code", "dw-z", "twisted-z", "tube-z", "vec-z", "s3"):
        assert name in out


def test_documented_builtins_resolve():
    for name in ("trivial", "fibonacci", "ising", "su2-3", "pointed-z3",
                 "pointed-z4-1", "toric-code", "dw-z2", "dw-z2x2",
                 "twisted-z3-1", "double-fibonacci", "tube-z2-1"):
        d = resolve_builtin_data(name)
        assert d.rank >= 1


def test_unknown_builtin_exit2(capsys):
    code, _, err = run(capsys, "verify", "--data", "builtin:nope")
    assert code == 2
    assert "unknown builtin" in err


def test_no_command_usage(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_help_exits_zero(capsys):
    code, _, _ = run(capsys, "--help")
    assert code == 0


def test_bad_threads(capsys):
    code, _, err = run(capsys, "--threads", "0", "verify", "--data", "builtin:trivial")
    assert code == 2


def test_fmt_value_twelve_digits():
    assert fmt_value(0.5) == "0.500000000000 0.000000000000"
    z = complex(1 / 3, -2 / 7)
    re_, im = fmt_value(z).split()
    assert math.isclose(float(re_), z.real, abs_tol=5e-13)
    assert math.isclose(float(im), z.imag, abs_tol=5e-13)


def test_double_builtin_matches_library():
    import numpy as np

    d = resolve_builtin_data("double-ising")
    ref = tvo.double_data(tvo.ising())
    assert np.array_equal(d.S, ref.S)


def test_command_result_contract():
    import argparse

    from tvo.cli import cmd_invariant

    args = argparse.Namespace(manifold="lens", p=3, q=1, r=None, tree=None,
                              data="builtin:toric-code")
    res = cmd_invariant(args)
    assert res.exit_code == 0
    assert res.records == ["0.500000000000 0.000000000000"]
    assert res.lines and res.lines[0].startswith("#")
    assert res.warnings == []

    args.data = "builtin:fibonacci"
    res = cmd_invariant(args)
    assert res.exit_code == 0 and res.warnings
