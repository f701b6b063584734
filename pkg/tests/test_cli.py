import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from exactfield import CycloNumber
from main import VERSION, cli


@pytest.fixture
def runner():
    return CliRunner()


def _stdout_report(result):
    assert result.exit_code in (0, 1), result.output
    return json.loads(result.stdout)


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert VERSION in result.output


def test_example_then_verify(runner):
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ["--output-dir", "out", "example", "--name", "taft", "--emit", "h.json"])
        assert result.exit_code == 0, result.output
        written = Path(result.stdout.strip())
        assert written.parent == Path("out")
        body = json.loads(written.read_text())
        assert body["command"] == "example"
        assert body["result"]["dim"] == 4
        assert len(body["input_sha256"]) == 64

        result = runner.invoke(cli, ["--stdout", "verify", "--level", "hopf", "h.json"])
        report = _stdout_report(result)
        assert result.exit_code == 0
        assert report["passed"] is True
        assert report["result"]["dim"] == 4


def test_broken_structure_exits_one(runner, kz2):
    with runner.isolated_filesystem():
        g = CycloNumber.one()
        kz2.with_tables(mult={(0, 0): {0: g}, (0, 1): {1: g}, (1, 0): {1: g}, (1, 1): {1: g}}).save("bad.json")
        result = runner.invoke(cli, ["--stdout", "verify", "--level", "hopf", "bad.json"])
        assert result.exit_code == 1
        report = _stdout_report(result)
        assert report["passed"] is False


def test_invalid_inputs_exit_two(runner):
    with runner.isolated_filesystem():
        assert runner.invoke(cli, ["verify", "missing.json"]).exit_code == 2
        Path("garbage.json").write_text("{not json")
        assert runner.invoke(cli, ["verify", "garbage.json"]).exit_code == 2
        Path("short.json").write_text(json.dumps({"labels": ["1"]}))
        assert runner.invoke(cli, ["verify", "short.json"]).exit_code == 2
        assert runner.invoke(cli, ["example", "--name", "case-ii", "--n", "3"]).exit_code == 2
        assert runner.invoke(cli, ["rep-type"]).exit_code == 2


def test_reports_do_not_depend_on_threads(runner):
    with runner.isolated_filesystem():
        outputs = [
            runner.invoke(cli, ["--stdout", "--threads", str(t), "example", "--name", "case-ii", "--verify"]).stdout
            for t in (1, 2)
        ]
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["result"]["filtration"] == [2, 6, 8]


def test_coradical_rep_type_and_based_ring(runner):
    with runner.isolated_filesystem():
        assert runner.invoke(cli, ["--stdout", "example", "--name", "taft", "--emit", "h.json"]).exit_code == 0

        report = _stdout_report(runner.invoke(cli, ["--stdout", "coradical", "h.json", "--blocks",
                                                    "--dual-chevalley"]))
        assert report["result"]["filtration"] == [2, 4]
        assert [b["label"] for b in report["result"]["blocks"]] == ["k1", "kg"]

        result = runner.invoke(cli, ["--stdout", "rep-type", "h.json", "--dot", "q.dot", "--dual-chevalley"])
        report = _stdout_report(result)
        assert report["result"]["label"] == "Finite"
        assert Path("q.dot").read_text().startswith('digraph "link_quiver" {')

        report = _stdout_report(runner.invoke(cli, ["--stdout", "link-quiver", "h.json"]))
        assert report["result"]["link_indecomposable"] is True
        assert report["result"]["trivial_component"] == ["k1", "kg"]

        report = _stdout_report(runner.invoke(cli, ["--stdout", "based-ring", "h.json", "--arrows"]))
        assert report["passed"] is True
        assert report["result"]["table"]["simples"] == ["k1", "kg"]


def test_rep_type_from_a_quiver_file(runner):
    with runner.isolated_filesystem():
        quiver = {"vertices": [["k1", 1], ["C", 2]], "arrows": [["C", "k1", 1], ["k1", "C", 1]], "trivial": "k1"}
        Path("q.json").write_text(json.dumps(quiver))
        report = _stdout_report(runner.invoke(cli, ["--stdout", "rep-type", "--quiver", "q.json"]))
        assert report["result"]["label"] == "TameCandidate(ii)"


def test_radford_from_emitted_splitting(runner):
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ["--stdout", "example", "--name", "case-ii", "--emit", "h.json",
                                     "--emit-splitting", "split"])
        assert result.exit_code == 0, result.output
        result = runner.invoke(cli, ["--stdout", "radford", "--h", "h.json", "--hp", "split/hp.json",
                                     "--proj", "split/proj.json", "--incl", "split/incl.json"])
        report = _stdout_report(result)
        assert result.exit_code == 0
        assert report["result"]["dim_R_H"] == 4


def test_tame_ideal_and_combi(runner):
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ["--stdout", "tame-ideal", "--family", "F2", "--a", "-1", "--m", "2",
                                     "--emit", "r.json", "--samples", "50"])
        report = _stdout_report(result)
        assert result.exit_code == 0
        assert report["result"]["dim"] == 8
        assert runner.invoke(cli, ["--stdout", "verify", "--level", "algebra", "r.json"]).exit_code == 0

        report = _stdout_report(runner.invoke(cli, ["--stdout", "combi", "--m", "5", "--z", "zeta5^2"]))
        assert report["result"]["vanishes"] is True
        assert report["result"]["primitive"] is True
        report = _stdout_report(runner.invoke(cli, ["--stdout", "combi", "--m", "4", "--l", "2"]))
        assert report["passed"] is True
        assert set(report["result"]["polynomials"]) == {"H1", "H2", "H3"}


@pytest.mark.slow
def test_solve_k_for_the_dual_dihedral_entry(runner):
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ["--stdout", "solve-k", "--name", "d8star", "--m", "1", "--a", "-1"])
        report = _stdout_report(result)
        assert report["result"]["diagonal"] is True
