from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ksroots import fileformat, roots
from ksroots.cli import EXIT_CHECK, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from ksroots.config import Configuration
from ksroots.fileformat import ConfigFormatError


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("system", ["G2", "H3", "E7", "E6-hat"])
def test_generate_round_trip(tmp_path, capsys, system, systems, a_hat):
    path = tmp_path / f"{system}.json"
    code, out, _ = _run(capsys, "generate", system, str(path))
    assert code == EXIT_OK
    expected = a_hat if system == "E6-hat" else systems[system]
    assert fileformat.load(path) == expected
    assert f"{len(expected)} rays" in out


def test_generated_file_shape(tmp_path, capsys):
    path = tmp_path / "g2.json"
    _run(capsys, "generate", "G2", str(path))
    lines = path.read_text().splitlines()
    assert lines[:5] == ['{', '  "name": "G2",', '  "d": 2,', '  "n": 3,', '  "ring": "Z[tau]",']
    assert lines[6] == "    [[0,0],[1,0],[-1,0]],"
    assert len(lines) == 6 + 6 + 2


def test_analyze_h3(tmp_path, capsys):
    path = tmp_path / "h3.json"
    _run(capsys, "generate", "H3", str(path))
    code, out, _ = _run(capsys, "analyze", str(path), "--cliques", "3", "--saturation", "--colour", "count")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["clique_profile"] == {"2": 15, "3": 5}
    assert doc["saturation"]["saturated"] is True
    assert doc["colouring"] == {"mode": "count", "status": "SAT", "count": 243, "red": doc["colouring"]["red"]}


def test_analyze_e7_anticliques_and_cnf(tmp_path, capsys):
    path = tmp_path / "e7.json"
    cnf = tmp_path / "e7.cnf"
    _run(capsys, "generate", "E7", str(path))
    code, out, _ = _run(capsys, "analyze", str(path), "--anticliques", "8", "--cnf", str(cnf))
    assert code == EXIT_OK
    assert json.loads(out)["anticlique_profile"]["8"] == 0
    assert "p cnf 63 1080" in cnf.read_text()


def test_analyze_is_deterministic_apart_from_timings(tmp_path, capsys):
    path = tmp_path / "f4.json"
    _run(capsys, "generate", "F4", str(path))
    docs = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        assert _run(capsys, "analyze", str(path), "--cliques", "4", "--colour", "decide", "-o", str(out))[0] == 0
        doc = json.loads(out.read_text())
        doc.pop("timings")
        docs.append(doc)
    assert docs[0] == docs[1]
    assert docs[0]["colouring"]["status"] == "UNSAT"


def test_usage_errors(tmp_path, capsys):
    assert _run(capsys, "generate", "A5", str(tmp_path / "x.json"))[0] == EXIT_USAGE
    assert _run(capsys, "frobnicate")[0] == EXIT_USAGE
    path = tmp_path / "g2.json"
    _run(capsys, "generate", "G2", str(path))
    assert _run(capsys, "analyze", str(path), "--cliques", "1")[0] == EXIT_USAGE
    assert _run(capsys, "analyze", str(path), "--colour", "maybe")[0] == EXIT_USAGE


def test_missing_input(tmp_path, capsys):
    code, _, err = _run(capsys, "analyze", str(tmp_path / "nope.json"))
    assert code == EXIT_IO
    assert "nope.json" in err


def test_malformed_file_reports_line(tmp_path, capsys):
    path = tmp_path / "bad.json"
    text = fileformat.dumps(roots.configuration("G2"))
    lines = text.splitlines()
    lines[8] = lines[8].replace("[1,0]", "[1]")
    path.write_text("\n".join(lines) + "\n")
    code, _, err = _run(capsys, "analyze", str(path))
    assert code == EXIT_IO
    assert "line 9" in err


@pytest.mark.parametrize(
    "edit, line, message",
    [
        (lambda ls: ls.__setitem__(7, "    [[2,0],[-4,0],[2,0]],"), 8, "canonical"),
        (lambda ls: ls.__setitem__(7, "    [[0,0],[0,0],[0,0]],"), 8, "zero"),
        (lambda ls: ls.__setitem__(4, '  "ring": "Z[i]",'), 5, "ring"),
        (lambda ls: ls.__setitem__(10, "    [[1,0],[1,0] [-2,0]],"), 11, "Expecting"),
    ],
)
def test_format_errors(edit, line, message):
    lines = fileformat.dumps(roots.configuration("G2")).splitlines()
    edit(lines)
    with pytest.raises(ConfigFormatError, match=message) as info:
        fileformat.loads("\n".join(lines))
    assert info.value.line == line


def test_duplicate_rays_rejected():
    lines = fileformat.dumps(roots.configuration("G2")).splitlines()
    lines[7] = lines[6]
    with pytest.raises(ConfigFormatError, match="duplicate"):
        fileformat.loads("\n".join(lines))


def test_empty_configuration_round_trip():
    c = Configuration([], 3, "empty")
    assert fileformat.loads(fileformat.dumps(c)) == c


@pytest.mark.slow
def test_reproduce(tmp_path, capsys):
    code, out, err = _run(capsys, "reproduce", str(tmp_path))
    lines = out.splitlines()
    assert "E7.n_4 = 4725 PASS" in lines
    assert "Atilde.goodcolourings = 1 PASS" in lines
    assert "H3.partition.count = 1 PASS" in lines
    failing = sorted(line.split(" = ")[0] for line in lines if " FAIL" in line)
    # the three printed values that the computation does not reproduce
    assert failing == ["Ahat.n_3", "Atilde.proof.d", "Atilde.proof.e"]
    assert code == EXIT_CHECK
    assert (tmp_path / "summary.txt").read_text().splitlines() == lines
    for name in ("E7", "E6-tilde", "E6-hat"):
        assert (tmp_path / f"{name}.json").exists()
        assert (tmp_path / f"{name}.report.json").exists()
    first = (tmp_path / "summary.txt").read_text()
    _run(capsys, "reproduce", str(tmp_path))
    assert (tmp_path / "summary.txt").read_text() == first


def test_module_entry_point(tmp_path):
    path = tmp_path / "g2.json"
    proc = subprocess.run(
        [sys.executable, "-m", "ksroots", "generate", "G2", str(path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert path.exists()
