import csv
import io
import json
import subprocess
import sys

import pytest

from crucialperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "21354", "--k", "4", "--l", "3")
    assert code == 0
    assert "quadrocrucial: true" in out.splitlines()


def test_classify_json_and_csv(capsys):
    code, out, _ = run(capsys, "classify", "1 2 4 3", "--k", "4", "--l", "3", "--format", "json", "--via", "rsk")
    d = json.loads(out)
    assert code == 0 and d["top_right"] and not d["left"]
    code, out, _ = run(capsys, "classify", "1243", "--k", "4", "--l", "3", "--format", "csv")
    header, values = list(csv.reader(io.StringIO(out)))
    assert dict(zip(header, values))["top_right"] == "true"


def test_count_known_value(capsys):
    code, out, _ = run(capsys, "count", "--n", "5", "--k", "4", "--l", "3", "--type", "right", "--method", "brute")
    assert code == 0 and out.strip() == "15"


def test_count_json_is_stable_across_workers(capsys):
    args = ["count", "--n", "7", "--k", "4", "--l", "4", "--type", "quadro", "--format", "json"]
    _, one, _ = run(capsys, *args, "--jobs", "1")
    _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two
    d = json.loads(one)
    assert d["count"] == "2" and d["method"] == "brute"


def test_count_defaults_to_syt_past_the_cap(capsys):
    code, out, _ = run(capsys, "count", "--n", "11", "--k", "5", "--l", "4", "--type", "bi", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["method"] == "syt" and d["count"] == "111804"


def test_count_formula(capsys):
    code, out, _ = run(capsys, "count", "--n", "6", "--k", "3", "--l", "5", "--type", "bi", "--method", "formula",
                       "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[1][-1] == "9"


def test_list_streams_sorted(capsys):
    code, out, _ = run(capsys, "list", "--n", "5", "--k", "4", "--l", "3", "--type", "right")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 15 and lines[0] == "1 3 2 5 4"
    _, syt, _ = run(capsys, "list", "--n", "5", "--k", "4", "--l", "3", "--type", "right", "--method", "syt")
    assert syt == out
    _, js, _ = run(capsys, "list", "--n", "5", "--k", "4", "--l", "3", "--type", "quadro", "--format", "json")
    assert [json.loads(x) for x in js.splitlines()] == [[2, 1, 3, 5, 4]]


def test_rsk_text_and_json(capsys):
    code, out, _ = run(capsys, "rsk", "14523")
    assert code == 0 and out == "1 2 3\n4 5\n\n1 2 3\n4 5\n"
    _, out, _ = run(capsys, "rsk", "41523", "--format", "json")
    d = json.loads(out)
    assert d["P"] == [[1, 2, 3], [4, 5]] and d["shape"] == "3,2"


def test_minimal(capsys):
    _, out, _ = run(capsys, "minimal", "--type", "top_right", "--k", "4", "--l", "3")
    assert out.strip() == "1 2 4 3"
    _, out, _ = run(capsys, "minimal", "--type", "quadro", "--k", "5", "--l", "3", "--format", "json")
    d = json.loads(out)
    assert d["source"] == "construction" and d["permutations"] == [[2, 1, 3, 4, 6, 5]] and d["n"] == 6
    _, out, _ = run(capsys, "minimal", "--type", "bi", "--k", "5", "--l", "3")
    assert len(out.splitlines()) == 9
    _, out, _ = run(capsys, "minimal", "--type", "tri", "--k", "4", "--l", "3")
    assert len(out.splitlines()) == 3


def test_table_and_plot(capsys, tmp_path):
    path = tmp_path / "counts.png"
    code, out, err = run(capsys, "table", "--k", "4", "--l", "3", "--format", "csv", "--plot", str(path))
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["n", "right"]
    by_n = {int(r[0]): r[1:] for r in rows[1:]}
    assert by_n[5][0] == "15" and by_n[6] == ["25"] * 8
    assert path.exists() and path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert str(path) in err


def test_table_text_and_json(capsys):
    _, out, _ = run(capsys, "table", "--k", "3", "--l", "3", "--nmax", "4")
    assert out.splitlines()[-1].split() == ["4", "4", "4", "4", "4", "4", "4", "4", "4"]
    _, out, _ = run(capsys, "table", "--k", "3", "--l", "3", "--nmax", "2", "--format", "json", "--method", "brute")
    assert len(json.loads(out)) == 16


def test_verify_equivalence(capsys):
    code, out, err = run(capsys, "verify", "--suite", "equivalence", "--k", "4", "--l", "3", "--nmax", "7")
    assert code == 0
    assert out.splitlines() and all(line.startswith("PASS") for line in out.splitlines())
    assert "8/8" in err


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "inequalities", "--k", "5", "--l", "4", "--format", "json")
    assert code == 1
    bad = [json.loads(x) for x in out.splitlines() if not json.loads(x)["ok"]]
    assert [b["name"] for b in bad] == ["bicrucial, (k,l)=(5,4), n=11"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["classify", "1x2", "--k", "3", "--l", "3"], 2),
        (["classify", "1 1 2", "--k", "3", "--l", "3"], 2),
        (["classify", "123", "--k", "1", "--l", "3"], 2),
        (["classify", "123", "--k", "3"], 2),
        (["count", "--k", "4", "--l", "3", "--type", "right"], 2),
        (["count", "--n", "8", "--k", "5", "--l", "4", "--type", "tri", "--method", "formula"], 3),
        (["minimal", "--type", "quadro", "--k", "2", "--l", "4"], 3),
        (["count", "--n", "11", "--k", "4", "--l", "4", "--type", "right", "--method", "brute"], 4),
        (["list", "--n", "12", "--k", "4", "--l", "4", "--type", "right", "--method", "brute"], 4),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_brute_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("CRUCIAL_BRUTE_CAP", "4")
    code, _, _ = run(capsys, "count", "--n", "5", "--k", "4", "--l", "3", "--type", "right", "--method", "brute")
    assert code == 4


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--type", "sideways"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crucialperm", "count", "--n", "5", "--k", "4", "--l", "3", "--type", "right"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "15"
