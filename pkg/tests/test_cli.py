import json
import os

from quadbir.cli import main

DATA = os.path.join(
    os.path.dirname(__file__), "..", "src", "quadbir", "data", "ideals"
)
QUARTIC = os.path.join(DATA, "quartic_curve_base.ideal")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_command(capsys):
    code, out, _ = run(capsys, "hilbert", QUARTIC)
    assert code == 0
    assert "degree 4" in out and "sectional_genus 1" in out


def test_hilbert_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "hilbert", QUARTIC)
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 4 and payload["dim"] == 1


def test_gb_command(capsys):
    code, out, _ = run(capsys, "gb", QUARTIC, "--order", "degrevlex")
    assert code == 0
    assert "x4" in out


def test_map_command(capsys):
    code, out, _ = run(capsys, "map", QUARTIC, "--image", "--sing")
    assert code == 0
    assert "ambient gap 2" in out
    assert '"degree": 4' in out
    assert "singular locus" in out


def test_enumerate_commands(capsys):
    code, out, _ = run(capsys, "enumerate", "--r", "1")
    assert code == 0
    assert "surviving cases: 4" in out
    assert "struck by oadp_curve_is_twisted_cubic" in out
    code, out, _ = run(capsys, "enumerate", "--r", "3")
    assert code == 0
    assert out.count("n=8") == 14 and "19 cases" in out
    code, out, _ = run(capsys, "enumerate", "--r", "4")
    assert code == 0
    assert "open families" in out


def test_table_command(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    assert "all rows PASS (33 rows" in out


def test_coindex_command(capsys):
    code, out, _ = run(capsys, "coindex", "--d", "3", "--c", "2")
    assert code == 0
    assert out.strip().splitlines() == [
        "r=3 n=8 delta=0",
        "r=6 n=13 delta=1",
        "r=9 n=18 delta=2",
    ]


def test_invariants_command(capsys):
    code, out, _ = run(
        capsys,
        "invariants", "--r", "1", "--n", "4", "--a", "0",
    )
    assert code == 0
    assert "'lam': 5" in out and "'g': 1" in out


def test_verify_command_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "quadric_slices")
    assert code == 0
    assert "example quadric_slices: PASS" in out


def test_verify_all_is_deterministic(capsys):
    # a starved budget downgrades heavy work deterministically; two runs
    # must produce byte-identical canonical reports
    argv = ["--budget", "60000", "--seed", "7", "verify", "--all"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert out1 == out2
    assert "SKIPPED_HEAVY" in out1


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring x y over QQ\nideal:\nx +\n")
    code, _, err = run(capsys, "hilbert", str(bad))
    assert code == 2
    assert "line 3" in err
    code, _, err = run(capsys, "hilbert", str(tmp_path / "missing.ideal"))
    assert code == 2
