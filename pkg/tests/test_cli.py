import json
import subprocess
import sys

from waringcert.cli import infer_nvars, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_table(capsys):
    code, data = run_json(capsys, "table", "3", "12")
    assert code == 0
    assert [r["generic"] for r in data["rows"]] == [4, 6, 7, 10, 12, 15, 19, 22, 26, 31]
    assert [r["lower"] for r in data["rows"]] == [5, 7, 10, 12, 17, 20, 26, 30, 37, 42]
    code, data = run_json(capsys, "table", "4", "10")
    assert [r["lower"] for r in data["rows"]] == [7, 10, 15, 21, 31, 42, 56, 72]
    assert [r["upper_literature"] for r in data["rows"]][1:] == [17, 28, 42, 60, 84, 110, 144]


def test_table_rejects_other_n(capsys):
    assert main(["table", "5", "8"]) == 4


def test_table_pretty(capsys):
    code, out = run(capsys, "table", "3", "6", "--pretty")
    assert code == 0 and "lower_source" in out and "construction" in out


def test_hilbert(capsys):
    code, data = run_json(capsys, "hilbert", "x*y*z^3 + y^4*z")
    assert data["hilbert_function"] == [1, 3, 5, 5, 3, 1]
    assert data["apolar_length"] == 18


def test_bound_with_check(capsys):
    code, data = run_json(capsys, "bound", "x*y^2*z^2", "--check")
    assert code == 0
    assert data["bound"] == 9
    assert data["check"]["ok"]


def test_bound_with_alpha(capsys):
    code, data = run_json(capsys, "bound", "x*y*z^3 + y^4*z", "--alpha", "a")
    assert data["bound"] == 9 and data["alpha"] == "a"


def test_bad_input_exit_code(capsys):
    assert main(["bound", "x^2 + y"]) == 4
    assert main(["bound", "x*y", "--alpha", "a^2"]) == 4
    assert main(["construct", "3", "6"]) == 4
    assert main(["nonsense"]) == 4


def test_binary_rank(capsys):
    code, data = run_json(capsys, "binary-rank", "x^4*y + 2*x^2*y^3 + 1/5*y^5")
    assert data["rank"] == 2 and data["witness_verified"]


def test_verify(capsys, tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps([
        {"coef": "1/24", "point": ["1", "1", "1"]},
        {"coef": "-1/24", "point": ["1", "1", "-1"]},
        {"coef": "-1/24", "point": ["1", "-1", "1"]},
        {"coef": "1/24", "point": ["1", "-1", "-1"]},
    ]))
    code, data = run_json(capsys, "verify", "x*y*z", str(path))
    assert code == 0 and data["rank_at_most"] == 4
    path.write_text(json.dumps([{"coef": "1", "point": ["1", "1", "1"]}]))
    code, data = run_json(capsys, "verify", "x*y*z", str(path))
    assert code == 2 and not data["verified"]
    assert main(["verify", "x*y*z", str(tmp_path / "missing.json")]) == 4


def test_construct_and_check(capsys, tmp_path):
    code, out = run(capsys, "construct", "3", "5", "--seed", "2", "--check")
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == 10 and data["check"]["ok"]
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, checked = run_json(capsys, "check", str(path))
    assert code == 0 and checked["ok"] and checked["bound"] == 10
    data["steps"][0]["values"]["values"][1] = 99
    path.write_text(json.dumps(data))
    assert main(["check", str(path)]) == 2


def test_fixed_seed_is_byte_identical(capsys):
    _, a = run(capsys, "construct", "3", "7", "--seed", "5")
    _, b = run(capsys, "construct", "3", "7", "--seed", "5")
    assert a == b
    _, c = run(capsys, "decompose", "x*y*z", "--rank", "4", "--seed", "3")
    _, d = run(capsys, "decompose", "x*y*z", "--rank", "4", "--seed", "3")
    assert c == d


def test_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("WARING_SEED", "5")
    _, a = run(capsys, "construct", "3", "5")
    _, b = run(capsys, "construct", "3", "5", "--seed", "5")
    assert a == b
    monkeypatch.setenv("WARING_SEED", "abc")
    assert main(["construct", "3", "5"]) == 4


def test_decompose_exit_codes(capsys):
    code, data = run_json(capsys, "decompose", "x*y*z", "--rank", "4")
    assert code == 0 and data["converged"] and data["evidence_only"]
    code, data = run_json(capsys, "decompose", "x*y*z", "--rank", "1", "--restarts", "2")
    assert code == 3 and not data["converged"]


def test_quintic_exact_only(capsys):
    code, data = run_json(capsys, "quintic", "--no-numeric", "--check")
    assert code == 0
    assert data["bound"] == 10 and data["upper"]["bound"] == 10 and data["check"]["ok"]


def test_infer_nvars():
    assert infer_nvars("x*y*z^3") == 3
    assert infer_nvars("x^3") == 1
    assert infer_nvars("x*w") == 4
    assert infer_nvars("x0*x5") == 6


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "waringcert", "hilbert", "x*y"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["hilbert_function"] == [1, 2, 1]
