"""cli module: subcommands, exit codes, determinism, round trips."""

import json

import pytest

from lexdist.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return {
        "mono": write("mono.json", {"n": 2, "gens": [[2, 0], [1, 1]]}),
        "poly": write("poly.json", {"n": 2, "polys": ["x1^2 + x1*x2"]}),
        "shakin": write("shakin.json", {"n": 2, "pieces": [], "powers": [2, 2]}),
        "shakin_pl": write("shakin_pl.json",
                           {"n": 2, "pieces": [{"i": 1, "gens": [[2]]}], "powers": []}),
        "distraction": write("d.json", {
            "n": 2,
            "rows": [[{"c": [1, 0]}, {"c": [1, 1]}], [{"c": [0, 1]}]],
        }),
        "bad_base": write("bad.json", {"n": 2, "gens": [[0, 2]]}),
        "tmp": tmp_path,
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_hilbert_monomial(capsys, files):
    code, data = run(capsys, "hilbert", "--ideal", files["mono"], "--dmax", "6")
    assert code == 0
    assert data["values"] == [1, 2, 1, 1, 1, 1, 1]
    assert data["v"] == 1


def test_hilbert_polynomial_input(capsys, files):
    code, data = run(capsys, "hilbert", "--ideal", files["poly"], "--dmax", "4")
    assert code == 0
    assert data["values"] == [1, 2, 2, 2, 2]


def test_hilbert_round_trips_into_embed(capsys, files, tmp_path):
    art = tmp_path / "art.json"
    art.write_text(json.dumps({"n": 2, "gens": [[2, 0], [1, 1], [0, 2]]}))
    code, hf = run(capsys, "hilbert", "--ideal", str(art), "--dmax", "4")
    assert code == 0
    hf_file = tmp_path / "hf.json"
    hf_file.write_text(json.dumps(hf))
    code, data = run(capsys, "embed", "--shakin", files["shakin"], "--hf", str(hf_file))
    assert code == 0
    assert data["ideal"]["gens"] == [[0, 2], [1, 1], [2, 0]]


def test_embed_example(capsys, files):
    code, data = run(capsys, "embed", "--shakin", files["shakin"], "--hf", "[1,1,0]")
    assert code == 0
    assert data["ideal"]["gens"] == [[1, 0], [0, 2]]


def test_embed_not_admissible_exit_code(capsys, files):
    code, data = run(capsys, "embed", "--shakin", files["shakin"], "--hf", "[1,3,0]")
    assert code == 1
    assert data["error"] == "not-admissible"
    assert data["degree"] == 1


def test_lexify(capsys):
    code, data = run(capsys, "lexify", "--n", "2", "--hf", "[1,2,2,0]")
    assert code == 0
    assert data["ideal"]["gens"] == [[2, 0], [0, 3], [1, 2]]


def test_lexify_rejects_non_o_sequence(capsys):
    code, data = run(capsys, "lexify", "--n", "2", "--hf", "[1,3]")
    assert code == 1
    assert data["error"] == "no-such-ideal"
    assert data["degree"] == 1


def test_distract(capsys, files):
    code, data = run(capsys, "distract", "--ideal", files["mono"],
                     "--distraction", files["distraction"])
    assert code == 0
    assert data["polys"] == ["x1*x2", "x1^2 + x1*x2"]


def test_polarize(capsys, files):
    code, data = run(capsys, "polarize", "--ideal", files["mono"])
    assert code == 0
    assert data["extended_n"] == 5
    assert sorted(data["polarized"]["gens"]) == [[0, 0, 1, 0, 1], [0, 0, 1, 1, 0]]


def test_betti(capsys, files):
    code, data = run(capsys, "betti", "--ideal", files["mono"], "--dmax", "5")
    assert code == 0
    assert data["entries"] == {"0,0": 1, "1,2": 2, "2,3": 1}


def test_localcoh(capsys, files):
    code, data = run(capsys, "localcoh", "--ideal", files["mono"], "--window=-3:2")
    assert code == 0
    assert data["entries"]["0,1"] == 1
    assert data["window_truncated"] is True


def test_verify_pass_and_fail_exit_codes(capsys, files):
    code, data = run(capsys, "verify", "macaulay-lex",
                     "--shakin", files["shakin"], "--dmax", "4")
    assert code == 0 and data["passed"]
    code, data = run(capsys, "verify", "macaulay-lex",
                     "--shakin", files["bad_base"], "--dmax", "4")
    assert code == 1 and not data["passed"]


def test_verify_budget_exit_code(capsys, files, tmp_path):
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps({"n": 3, "gens": []}))
    code, data = run(capsys, "verify", "macaulay-lex",
                     "--shakin", str(zero), "--dmax", "3", "--budget", "5")
    assert code == 3
    assert data["error"] == "budget-exceeded"


def test_verify_sampled_kinds(capsys, files):
    code, data = run(capsys, "verify", "codistra-h0", "--n", "2", "--dmax", "4",
                     "--samples", "5", "--seed", "3")
    assert code == 0
    code, data = run(capsys, "verify", "distraction-hf",
                     "--shakin", files["shakin_pl"], "--dmax", "3",
                     "--distraction", files["distraction"], "--samples", "5")
    assert code == 0


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2


def test_byte_identical_output(capsys, files, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        code = main(["verify", "codistra-h0", "--n", "2", "--dmax", "4",
                     "--samples", "4", "--seed", "9", "--out", str(out)])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_pretty_rendering(capsys, files):
    code = main(["hilbert", "--ideal", files["mono"], "--dmax", "3", "--pretty"])
    out = capsys.readouterr().out
    assert code == 0
    assert "values:" in out
