import json
import pathlib
import shlex

import pytest

from koszulbench import cli

REPO = pathlib.Path(__file__).resolve().parents[1]
GOLDEN = sorted((REPO / "docs" / "golden").glob("*.txt"))


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_golden_files_present():
    names = {p.stem for p in GOLDEN}
    assert names == {
        "dyck-depth", "dyck-enumerate", "kl", "kl-invert-check",
        "mult-gr", "mult-flag", "weights", "primes", "phidec",
        "koszul", "koszul-integral",
    }


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden(path, capsys, monkeypatch):
    lines = path.read_text().splitlines(keepends=True)
    assert lines[0].startswith("$ koszulbench ")
    assert lines[1].startswith("# exit ")
    argv = shlex.split(lines[0][len("$ koszulbench "):])
    want_code = int(lines[1].split()[2])
    want_out = "".join(lines[2:])
    monkeypatch.chdir(REPO)
    code, out, err = run(argv, capsys)
    assert code == want_code
    assert out == want_out
    assert err == ""


def test_dyck_depth_text(capsys):
    code, out, _ = run(["dyck", "depth", "5,5,5,3,3/2,2"], capsys)
    assert code == 0
    assert out == "dyck: true, depth: 5\n"
    code, out, _ = run(["dyck", "depth", "4,4,4,3"], capsys)
    assert code == 0
    assert out == "dyck: false\n"


def test_dyck_depth_json(capsys):
    code, out, _ = run(["dyck", "depth", "2,2", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc == {"shape": "2,2", "is_dyck": True, "depth": 2}


def test_dyck_enumerate_json(capsys):
    code, out, _ = run(["dyck", "enumerate", "--box", "4x4", "--json"],
                       capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["shapes"] == 618
    assert doc["dyck"] == 112
    assert doc["max_depth"] == 4
    assert doc["depth_counts"] == {"0": 1, "1": 9, "2": 42, "3": 47,
                                   "4": 14}
    assert doc["bound_violations"] == 0


def test_kl_text_and_json(capsys):
    code, out, _ = run(["kl", "--n", "4", "--x", "1234", "--w", "4231"],
                       capsys)
    assert code == 0
    assert out == "P = q + 1\n"
    code, out, _ = run(
        ["kl", "--n", "4", "--x", "1234", "--w", "4231", "--json"], capsys)
    doc = json.loads(out)
    assert doc == {"n": 4, "x": "1234", "w": "4231", "P": {"0": 1, "1": 1}}


def test_kl_invert_check(capsys):
    code, out, _ = run(["kl", "invert-check", "--k", "2", "--n", "5"],
                       capsys)
    assert code == 0
    assert out == "pass\n"
    code, out, _ = run(
        ["kl", "invert-check", "--k", "1", "--n", "4", "--json"], capsys)
    assert code == 0
    assert json.loads(out) == {"space": "gr(1,4)", "ok": True}


def test_mult_gr_json_schema(capsys):
    code, out, _ = run(
        ["mult", "gr", "--k", "1", "--n", "2", "--tag", "cartan",
         "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["space"] == "gr(1,2)"
    assert doc["tag"] == "cartan"
    assert doc["labels"] == [[], [1]]
    assert doc["entries"] == [[{"0": 1, "-2": 1}, {"-1": 1}],
                              [{"-1": 1}, {"0": 1}]]


def test_mult_flag_json_labels(capsys):
    code, out, _ = run(
        ["mult", "flag", "--n", "3", "--tag", "delta_ic", "--json"],
        capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["labels"] == ["123", "132", "213", "231", "312", "321"]
    assert doc["entries"][5][0] == {"-3": 1}


def test_weights_text_and_json(capsys):
    code, out, _ = run(["weights", "--space", "gr:2,5"], capsys)
    assert code == 0
    assert out == "wt = {1,q,q^2}, wr = 3\n"
    code, out, _ = run(["weights", "--space", "flag(3)", "--json"], capsys)
    doc = json.loads(out)
    assert doc == {"space": "flag(3)", "wt": [0, 1, 2, 3], "wr": 4}


def test_primes_statuses(capsys):
    code, out, _ = run(["primes", "--l", "5", "--wt", "0,1,2"], capsys)
    assert code == 0
    assert out == "p = 2\n"
    code, out, _ = run(["primes", "--l", "2", "--wt", "0,1"], capsys)
    assert code == 0
    assert out == "no separating prime exists\n"
    code, out, _ = run(
        ["primes", "--l", "5", "--wt", "0,1,2", "--bound", "1", "--json"],
        capsys)
    assert code == 0
    assert json.loads(out) == {"status": "bound_too_small"}


def test_phidec_exit_codes(tmp_path, capsys):
    good = tmp_path / "diag.json"
    good.write_text(json.dumps([[1, 0], [0, 3]]))
    code, out, _ = run(
        ["phidec", "--matrix", str(good), "--q", "3", "--l", "5"], capsys)
    assert code == 0
    assert "decomposable" in out and "NOT" not in out
    bad = tmp_path / "witness.json"
    bad.write_text(json.dumps([[1, 1], [0, 4]]))
    code, out, _ = run(
        ["phidec", "--matrix", str(bad), "--q", "4", "--l", "3", "--json"],
        capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["decomposable"] is False
    assert doc["index"] == 3
    inapplicable = tmp_path / "inapp.json"
    inapplicable.write_text(json.dumps([[2, 0], [0, 3]]))
    code, out, _ = run(
        ["phidec", "--matrix", str(inapplicable), "--q", "3", "--l", "5"],
        capsys)
    assert code == 2
    assert "not applicable" in out


def test_koszul_exit_codes(capsys):
    code, out, _ = run(
        ["koszul", "--builtin", "p1", "--field", "Q"], capsys)
    assert code == 0
    assert out == "koszul: true (algebra p1 over Q, checked up to i = 8)\n"
    code, out, _ = run(
        ["koszul", "--builtin", "x3_truncation", "--field", "F:3",
         "--json"], capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["koszul"] is False
    assert doc["first_violation"]["i"] == 2


def test_koszul_algebra_file(capsys, monkeypatch):
    monkeypatch.chdir(REPO)
    code, out, _ = run(
        ["koszul", "--algebra", "docs/examples/algebra_p1.json",
         "--field", "F:2"], capsys)
    assert code == 0
    assert out.startswith("koszul: true")


def test_koszul_integral(capsys):
    code, out, _ = run(["koszul", "integral", "--builtin", "p1",
                        "--l", "7"], capsys)
    assert code == 0
    assert out == "ext dimensions match over Q and F7; koszul: true\n"
    code, out, _ = run(["koszul", "integral", "--builtin", "torsion_p1:3",
                        "--l", "3", "--json"], capsys)
    assert code == 2
    assert json.loads(out)["verdict"] == "inapplicable"


def test_bad_inputs_exit_one(capsys):
    for argv in (
        ["dyck", "depth", "1,2,3"],
        ["dyck", "enumerate", "--box", "20x20"],
        ["kl", "--n", "4", "--x", "1234", "--w", "1253"],
        ["weights", "--space", "gr:0,3"],
        ["primes", "--l", "6", "--wt", "0,1"],
        ["phidec", "--matrix", "/no/such/file.json", "--q", "3",
         "--l", "5"],
        ["koszul", "--builtin", "p2", "--field", "Q"],
        ["nonsense"],
        [],
    ):
        code, out, err = run(argv, capsys)
        assert code == 1, argv
        assert err != "", argv


def test_unknown_subcommand_prints_usage(capsys):
    code, out, err = run(["frobnicate"], capsys)
    assert code == 1
    assert "usage: koszulbench" in err


def test_json_determinism(capsys):
    argv = ["mult", "gr", "--k", "2", "--n", "4", "--tag", "cartan",
            "--json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
