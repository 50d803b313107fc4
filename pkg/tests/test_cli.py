import json
import subprocess
import sys

import pytest

from apexion.cli import EXIT_ERROR, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE, main
from apexion.graph import complete_graph
from apexion.graph6 import encode, read_file, write_file
from apexion.transforms import petersen_family


@pytest.fixture
def k456(tmp_path):
    p = tmp_path / "in.g6"
    write_file(p, [complete_graph(4), complete_graph(5), complete_graph(6)])
    return p


def test_classify(tmp_path, k456, capsys):
    out = tmp_path / "out"
    assert main(["classify", "--input", str(k456), "--output", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "planar: 1" in text and "apex: 1" in text and "nonapex: 1" in text
    assert read_file(out / "nonapex.g6") == [complete_graph(6)]
    rows = (out / "verdicts.csv").read_text().splitlines()
    assert rows[0] == "index,graph6,kind,witness" and rows[2].endswith(",apex,0")


def test_classify_empty(tmp_path, capsys):
    empty = tmp_path / "empty.g6"
    empty.write_bytes(b"")
    assert main(["classify", "--input", str(empty), "--output", str(tmp_path / "o")]) == EXIT_OK
    assert "nonapex: 0" in capsys.readouterr().out


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_bytes(b"@\nZZ\n")
    assert main(["classify", "--input", str(bad), "--output", str(tmp_path / "o")]) == EXIT_ERROR
    assert "line 2" in capsys.readouterr().err
    assert main(["classify", "--skip-errors", "--input", str(bad), "--output", str(tmp_path / "o")]) == EXIT_OK


def test_missing_file(tmp_path):
    assert main(["table", "--input", str(tmp_path / "nope.g6")]) == EXIT_ERROR


def test_cascade_and_table(tmp_path, capsys):
    seeds = tmp_path / "pf.g6"
    write_file(seeds, petersen_family())
    out = tmp_path / "out"
    assert main(["cascade", "--input", str(seeds), "--output", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "min_degree=3" in text
    assert len(read_file(out / "mmna.g6")) == 7
    csv = (out / "mmna_counts.csv").read_bytes()
    assert csv.startswith(b"n,e,count\n6,15,1\n7,15,2\n") and b"\r" not in csv
    assert main(["table", "--input", str(out / "mmna.g6")]) == EXIT_OK
    assert "total" in capsys.readouterr().out


def test_cascade_incomplete(tmp_path, capsys):
    seeds = tmp_path / "k7.g6"
    write_file(seeds, [complete_graph(7)])
    out = tmp_path / "out"
    assert main(["cascade", "--input", str(seeds), "--output", str(out), "--max-depth", "1"]) == EXIT_INCOMPLETE
    assert (out / "unexplored.g6").exists()


def test_threads_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("APEXION_THREADS", "2")
    seeds = tmp_path / "k6.g6"
    write_file(seeds, [complete_graph(6)])
    assert main(["cascade", "--input", str(seeds), "--output", str(tmp_path / "o")]) == EXIT_OK
    assert "workers=2" in capsys.readouterr().out


def test_closure(tmp_path, capsysbinary):
    seeds = tmp_path / "k6.g6"
    write_file(seeds, [complete_graph(6)])
    assert main(["closure", "--input", str(seeds)]) == EXIT_OK
    lines = capsysbinary.readouterr().out.split()
    assert len(lines) == 7
    assert main(["closure", "--input", str(seeds), "--caps", "8,15", "--output", str(tmp_path / "c")]) == EXIT_OK
    assert len(read_file(tmp_path / "c" / "closure.g6")) == 5
    k3 = tmp_path / "k3.g6"
    write_file(k3, [complete_graph(3)])
    assert main(["closure", "--input", str(k3)]) == EXIT_OK
    assert len(capsysbinary.readouterr().out.split()) == 2


def test_k6_audit(tmp_path, capsys):
    assert main(["k6-audit", "--count", "3", "--seed", "4"]) == EXIT_OK
    assert "3/3" in capsys.readouterr().out
    assert main(["k6-audit", "--count", "0"]) == EXIT_USAGE


def test_encode_decode_round_trip(tmp_path, capsys):
    src = tmp_path / "edges.jsonl"
    src.write_text(json.dumps({"order": 2, "edges": [[0, 1]]}) + "\n" + json.dumps({"order": 1, "edges": []}) + "\n")
    assert main(["encode", "--input", str(src)]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["A_", "@"]
    g6 = tmp_path / "x.g6"
    g6.write_text("A_\n")
    assert main(["decode", "--input", str(g6)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"order": 2, "edges": [[0, 1]]}
    bad = tmp_path / "bad.jsonl"
    bad.write_text(json.dumps({"order": 2, "edges": [[0, 0]]}) + "\n")
    assert main(["encode", "--input", str(bad)]) == EXIT_ERROR


def test_enumerate(tmp_path, capsys):
    assert main(["enumerate", "--order", "4", "--output", str(tmp_path)]) == EXIT_OK
    assert len(read_file(tmp_path / "graphs_n4.g6")) == 11
    assert main(["enumerate", "--order", "11"]) == EXIT_USAGE


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "apexion.cli", "encode"], input='{"order": 3, "edges": [[0,1],[1,2],[0,2]]}\n', capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == encode(complete_graph(3)).decode()
