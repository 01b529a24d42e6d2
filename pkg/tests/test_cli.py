import json
import subprocess
import sys
from pathlib import Path

import pytest

from detschemes.cli import AnalysisReport, dumps, from_json_safe, main, to_json_safe

HERE = Path(__file__).parent
FIX = HERE / "fixtures"
GOLDEN = HERE / "golden"
SURFACE = str(FIX / "surface.json")
SCROLL = str(FIX / "scroll.txt")
NONHOMOG = str(FIX / "nonhomog.json")

GOLDEN_RUNS = {
    "surface_analyze.json": ["analyze", SURFACE, "--n", "5", "--json"],
    "scroll_analyze.json": ["analyze", SCROLL, "--n", "5", "--json"],
    "surface_ag15.json": ["ag", SURFACE, "--n", "5", "--m", "15", "--json"],
    "scroll_ag5.json": ["ag", SCROLL, "--n", "5", "--m", "5", "--json"],
    "surface_chains.json": ["chains", SURFACE, "--json"],
}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_RUNS))
def test_golden_json_is_byte_stable(name, capsys):
    code, out, _ = run(GOLDEN_RUNS[name], capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()
    code, again, _ = run(GOLDEN_RUNS[name], capsys)
    assert again == out


def test_golden_values():
    rep = json.loads((GOLDEN / "surface_analyze.json").read_text())
    assert rep["degree"] == 46 and rep["regularity"] == 8
    assert rep["h_vector"] == [1, 3, 6, 10, 12, 9, 4, 1]
    rep = json.loads((GOLDEN / "scroll_analyze.json").read_text())
    assert rep["h_vector"] == [1, 3] and rep["degree"] == 4 and rep["regularity"] == 2
    ag = json.loads((GOLDEN / "surface_ag15.json").read_text())
    assert ag["h_vector"] == [1, 4, 10, 20, 32, 41, 45, 46, 46, 46, 46, 45, 41, 32, 20, 10, 4, 1]
    assert ag["symmetric"] and ag["decreasing_type"] and ag["m_min_numeric"] == 12
    assert json.loads((GOLDEN / "scroll_ag5.json").read_text())["h_vector"] == [1, 4, 4, 4, 4, 4, 4, 1]
    ch = json.loads((GOLDEN / "surface_chains.json").read_text())
    assert ch["total"] == 17 and ch["counts_by_weight"] == [6, 8, 3]


def test_report_round_trip():
    text = (GOLDEN / "surface_analyze.json").read_text()
    rep = AnalysisReport.from_json(text)
    assert rep.to_json() == text
    assert AnalysisReport.from_json(rep.to_json()) == rep


def test_big_integers_become_strings():
    big = 2 ** 53 + 1
    obj = {"a": [1, big, -big], "b": 2 ** 53}
    safe = to_json_safe(obj)
    assert safe == {"a": [1, str(big), str(-big)], "b": 2 ** 53}
    assert from_json_safe(json.loads(dumps(obj))) == obj


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", SURFACE, "--n", "5"], 0),
        (["check", SURFACE, "--n", "5"], 0),
        (["check", SCROLL, "--n", "5"], 0),
        (["analyze", NONHOMOG, "--n", "3"], 2),
        (["analyze", SURFACE], 2),
        (["analyze", str(FIX / "missing.json"), "--n", "5"], 2),
        (["nosuchcommand"], 2),
        (["ag", SURFACE, "--n", "5", "--m", "3"], 3),
        (["ag", SCROLL, "--n", "4", "--m", "3"], 3),
        (["analyze", SURFACE, "--n", "2"], 3),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_error_messages(capsys):
    _, _, err = run(["analyze", NONHOMOG, "--n", "3"], capsys)
    assert "NotHomogeneous at (1,1),(2,2)" in err
    _, _, err = run(["ag", SURFACE, "--n", "5", "--m", "3"], capsys)
    assert "MTooSmall" in err and "12" in err


def test_hilbert_table(capsys):
    code, out, _ = run(["hilbert", SURFACE, "--n", "5", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    rows = {row["t"]: row for row in data["rows"]}
    assert rows[3]["H"] == 56
    assert data["r"] == 7
    code, out, _ = run(["hilbert", SURFACE, "--n", "5", "--t-max", "0", "--json"], capsys)
    assert [row["H"] for row in json.loads(out)["rows"]] == [1]
    code, out, _ = run(["hilbert", SURFACE, "--n", "5"], capsys)
    assert "<- r" in out


def test_hilbert_second_difference_stabilizes(capsys):
    _, out, _ = run(["hilbert", SURFACE, "--n", "5", "--t-max", "12", "--json"], capsys)
    rows = json.loads(out)["rows"]
    second = [row["delta"][1] for row in rows]
    assert second[7:] == [46] * 6 and second[6] != 46


def test_chains_listing(capsys, tmp_path):
    _, out, _ = run(["chains", SCROLL], capsys)
    assert "1 - 6*z^2 + 8*z^3 - 3*z^4" in out
    one = tmp_path / "one.txt"
    one.write_text("4\n")
    _, out, _ = run(["chains", str(one), "--json"], capsys)
    assert json.loads(out)["total"] == 1
    _, out, _ = run(["chains", SURFACE, "--group-by-weight"], capsys)
    assert "17" in out


def test_flags_before_subcommand(capsys):
    code, out, _ = run(["--json", "--n", "5", "analyze", SURFACE], capsys)
    assert code == 0
    assert out == (GOLDEN / "surface_analyze.json").read_text()


def test_threads_do_not_change_output(capsys):
    _, out, _ = run(["analyze", SURFACE, "--n", "5", "--json", "--threads", "2"], capsys)
    assert out == (GOLDEN / "surface_analyze.json").read_text()


def test_canonicalization_recorded(capsys, tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("3 2 3 3\n2 1 2 2\n")
    _, out, _ = run(["analyze", str(p), "--n", "5", "--json"], capsys)
    rep = json.loads(out)
    assert rep["canonicalized"] is True
    assert rep["matrix"] == [[2, 2, 2, 1], [3, 3, 3, 2]]
    assert rep["degree"] == 46
    _, out, _ = run(["analyze", str(p), "--n", "5", "--json", "--no-canonicalize"], capsys)
    rep = json.loads(out)
    assert rep["canonicalized"] is False and rep["regularity_closed"] is None


def test_random_is_seed_deterministic(capsys, tmp_path):
    argv = ["random", "--l", "2", "--c", "3", "--max-entry", "3", "--seed", "7", "--count", "5"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 5
    for line in lines:
        m = json.loads(line)["entries"]
        assert len(m) == 2 and len(m[0]) == 4
        assert all(1 <= x <= 3 for row in m for x in row)
    _, out, _ = run(["random", "--l", "1", "--c", "1", "--seed", "1", "--count", "3"], capsys)
    assert all(len(json.loads(x)["entries"]) == 1 and len(json.loads(x)["entries"][0]) == 1 for x in out.splitlines())
    _, out, _ = run(argv + ["--out-dir", str(tmp_path)], capsys)
    files = sorted(tmp_path.glob("random_l2_c3_*.json"))
    assert len(files) == 5
    assert [json.loads(f.read_text()) for f in files] == [json.loads(x) for x in lines]
    for f in files:
        assert run(["check", str(f), "--n", "5"], capsys)[0] == 0


def test_console_script_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "detschemes", "analyze", "-", "--n", "5", "--json"],
        input=(FIX / "scroll.txt").read_text(), capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "scroll_analyze.json").read_text()
