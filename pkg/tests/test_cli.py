import json
import subprocess
import sys

import pytest

from hopfdihedral.cli import main, parse_degrees, UsageError

GOOD_Z2 = """
gen g; rel g^2 = 1;
star g = g; filt g = 0;
delta g = g@g; eps g = 1; S g = g; Sinv g = g;
"""


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_builtin(capsys):
    code, out, err = run(["verify", "--algebra", "uq_sl2", "--samples", "10"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] and payload["mpi"]["pass"]
    assert "pass" in err


def test_verify_construction(capsys):
    code, out, _ = run(["verify", "--algebra", "group:S3", "--construction", "path-space",
                        "--max-degree", "2"], capsys)
    assert code == 0
    assert json.loads(out)["relations"]["pass"]


def test_verify_presentation_file(tmp_path, capsys):
    f = tmp_path / "z2.txt"
    f.write_text(GOOD_Z2)
    code, _, _ = run(["verify", "--algebra", str(f)], capsys)
    assert code == 0


def test_verify_failure_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text(GOOD_Z2.replace("eps g = 1", "eps g = -1"))
    code, out, err = run(["verify", "--algebra", str(f)], capsys)
    assert code == 1
    assert not json.loads(out)["pass"]
    assert "FAIL" in err


@pytest.mark.parametrize("sign,dims", [("+", [2, 0, 0, 0, 2]), ("-", [0, 0, 2, 0, 0])])
def test_homology_signs(sign, dims, capsys):
    code, out, _ = run(["homology", "--algebra", "group:Z2", "--construction", "algebra-dual",
                        "--sign", sign, "--degrees", "0..4"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert [e["dim"] for e in res[0]["entries"]] == dims


def test_homology_hochschild_both(capsys):
    code, out, _ = run(["homology", "--algebra", "group:Z2", "--construction", "algebra-dual",
                        "--sign", "both", "--hochschild", "--degrees", "0..2"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert [r["kind"] for r in res] == ["hochschild+", "hochschild-"]
    assert [e["dim"] for e in res[0]["entries"]] == [2, 0, 0]


def test_homology_needs_construction(capsys):
    code, _, err = run(["homology", "--algebra", "group:Z2"], capsys)
    assert code == 2
    assert "construction" in err


def test_homology_infinite_needs_truncation(capsys):
    code, _, err = run(["homology", "--algebra", "o_u1", "--construction", "hopf-homology"], capsys)
    assert code == 2
    assert "truncation" in err


def test_truncated_window_is_reported(capsys):
    code, _, err = run(["homology", "--algebra", "o_u1", "--construction", "hopf-homology",
                        "--truncation", "2", "--degrees", "0..3"], capsys)
    assert code == 2
    assert "window" in err


def test_truncated_hochschild_flags_unstable_degrees(capsys):
    argv = ["homology", "--algebra", "o_u1", "--construction", "hopf-homology", "--hochschild",
            "--degrees", "0..3", "--truncation"]
    code, out, _ = run(argv + ["2"], capsys)
    assert code == 0
    rows = [(e["dim"], e["stable"]) for e in json.loads(out)["results"][0]["entries"]]
    assert rows == [(1, True), (1, True), (1, False), (0, False)]
    code, out, _ = run(argv + ["4"], capsys)
    rows = [(e["dim"], e["stable"]) for e in json.loads(out)["results"][0]["entries"]]
    assert rows == [(1, True), (1, True), (0, True), (0, True)]


def test_bad_q(capsys):
    code, _, err = run(["verify", "--algebra", "uq_sl2", "--q", "1"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_bad_degrees():
    with pytest.raises(UsageError):
        parse_degrees("3..1")
    with pytest.raises(UsageError):
        parse_degrees("x")
    assert parse_degrees("2") == [2]
    assert parse_degrees("0..3") == [0, 1, 2, 3]


def test_podles_chern(capsys):
    code, out, _ = run(["podles-chern"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficient"] == "-700/481"
    assert payload["nontrivial"]


def test_output_is_deterministic(tmp_path):
    paths = []
    for i in range(2):
        p = tmp_path / f"out{i}.json"
        assert main(["homology", "--algebra", "group:Z3", "--construction", "hopf-homology",
                     "--sign", "both", "--degrees", "0..3", "--seed", "7", "--out", str(p)]) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfdihedral", "verify", "--algebra", "group:Z3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"]
