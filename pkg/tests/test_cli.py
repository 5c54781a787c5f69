import io
import json
import subprocess
import sys

import pytest

from ectdom import families as fam
from ectdom.cli import main
from ectdom.graph_io import parse_edgelist, write_edgelist, write_graph6


def run(argv, capsys, monkeypatch, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=None: run(argv, capsys, monkeypatch, stdin)


def test_compute_gamma_ct_from_file(cli, tmp_path):
    path = tmp_path / "c7.txt"
    path.write_text(write_edgelist(fam.cycle(7)))
    assert cli(["compute", str(path), "--format", "edgelist", "--params", "gamma_ct"]) == (0, "gamma_ct = 3\n", "")


def test_compute_profile_c4(cli):
    code, out, _ = cli(["compute", "-", "--params", "profile", "--mode", "literal"], write_edgelist(fam.cycle(4)))
    assert code == 0
    values = dict(line.split(" = ") for line in out.splitlines() if " = " in line)
    assert values == dict.fromkeys(["ir_ct", "gamma_ct", "i_ct", "beta_ct", "Gamma_ct", "IR_ct"], "2")


def test_compute_lambda_k6_json_with_witness(cli):
    code, out, _ = cli(["compute", "--format", "graph6", "--params", "lambda,beta1", "--json", "--witness"],
                       write_graph6(fam.complete(6)) + "\n")
    doc = json.loads(out)
    assert code == 0 and doc["params"]["lambda"]["value"] == 5
    assert len(doc["params"]["lambda"]["witness"]) == 5
    assert doc["params"]["beta1"]["value"] == 3


def test_compute_witness_text(cli):
    _, out, _ = cli(["compute", "--params", "gamma_ct", "--witness"], write_edgelist(fam.figure2()[0]))
    assert out == "gamma_ct = 2  witness {(1,3), (2,4)}\n"


@pytest.mark.parametrize(
    "argv, stdin, needle",
    [
        (["compute", "--params", "gamma_ct"], "3 2\n0 1\n", "expected 2 edges"),
        (["compute", "--params", "bogus"], "2 1\n0 1\n", "unknown parameter"),
        (["compute", "--params", ","], "2 1\n0 1\n", "at least one"),
        (["compute", "--params", "profile"], write_edgelist(fam.complete(7)), "--profile-cap"),
        (["compute", "--params", "gamma_ct", "--gamma-cap", "3"], write_edgelist(fam.complete(4)), "--gamma-cap"),
        (["compute", "--params", "gamma_ct"], "4 2\n0 1\n2 3\n", "connected"),
        (["compute", "/nonexistent/file"], None, "cannot open"),
        (["compute", "--gamma-cap", "0"], None, "positive"),
    ],
)
def test_compute_errors_exit_2(cli, argv, stdin, needle):
    code, out, err = cli(argv, stdin)
    assert code == 2 and out == "" and needle in err


def test_gen_examples(cli):
    code, out, _ = cli(["gen", "--family", "figure2", "--format", "edgelist"])
    assert code == 0 and parse_edgelist(out) == fam.figure2()[0]
    code, out, _ = cli(["gen", "--family", "two_cliques", "--m", "4", "--n", "4", "--len", "2"])
    g = parse_edgelist(out)
    assert (g.n, g.m) == (9, 14)
    assert cli(["gen", "--family", "wheel", "--n", "3", "--format", "graph6"])[1] == write_graph6(fam.wheel(3)) + "\n"


@pytest.mark.parametrize(
    "argv", [["gen", "--family", "cycle", "--n", "2"], ["gen", "--family", "cycle"], ["gen", "--family", "petersen"]]
)
def test_gen_errors(cli, argv):
    code, out, err = cli(argv)
    assert code == 2 and out == "" and err


def test_gen_compute_compose(cli):
    _, text, _ = cli(["gen", "--family", "wheel", "--n", "6"])
    assert cli(["compute", "--params", "gamma_ct"], text)[1] == "gamma_ct = 4\n"


def test_check_c15(cli):
    code, out, _ = cli(["check", "--claims", "C15", "--json"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["status"] for r in rows] == ["verified", "verified"]


def test_check_graph6_stream(cli):
    stream = "".join(write_graph6(g) + "\n" for g in fam.all_connected_graphs(4))
    code, out, _ = cli(["check", "--graph6", "-", "--claims", "C9", "--json"], stream)
    assert code == 0 and len(out.splitlines()) == 6


def test_check_graph6_decode_error(cli):
    code, out, err = cli(["check", "--graph6", "-", "--claims", "C9"], "A_\nD?\n")
    assert code == 2 and out == "" and "line 2" in err


def test_check_table_and_strict_claims(cli):
    code, out, _ = cli(["check", "--max-n", "4", "--claims", "C1,C13"])
    assert code == 0 and "hard claims: all verified" in out
    code, out, _ = cli(["check", "--max-n", "6", "--claims", "C13", "--strict-claims", "--show", "1"])
    assert code == 1 and "hard claims: FAILED" in out and "more (use --json for all)" in out


@pytest.mark.parametrize(
    "argv", [["check", "--max-n", "7"], ["check", "--max-n", "1"], ["check", "--claims", "C99"], ["check", "--mode", "x"]]
)
def test_check_usage_errors(cli, argv):
    assert cli(argv)[0] == 2


def test_survey_n5(cli):
    stream = "".join(write_graph6(g) + "\n" for g in fam.all_connected_graphs(5))
    code, out, _ = cli(["survey", "-"], stream)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 22


def test_survey_k4_flags(cli):
    code, out, _ = cli(["survey", "--json"], write_graph6(fam.complete(4)) + "\n")
    row = json.loads(out)
    assert (row["lambda"], row["gamma_ct"], row["gamma_prime"]) == (3, 3, 2)
    assert row["lam_eq_gct"] and not row["gp_eq_gct"]


def test_survey_empty_and_errors(cli):
    assert cli(["survey", "--json"], "") == (0, "", "")
    code, out, err = cli(["survey", "--json"], "zz\nA_\nC?\n")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 2 and "line 1" in err
    assert [r["status"] for r in rows] == ["ok", "skipped-disconnected"]


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ectdom", "compute", "--params", "lambda"],
        input="6 15\n" + "".join(f"{u} {v}\n" for u, v in fam.complete(6).edges),
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout == "lambda = 5\n"
