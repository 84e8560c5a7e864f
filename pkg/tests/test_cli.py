import json
import subprocess
import sys

import pytest

from pseudostandard.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys):
    assert run(capsys, "normalize", "--delta", "0001", "--theta", "R0R2") == (
        0,
        "delta=0001 theta=0002 notchanged=false\n",
        "",
    )
    code, out, _ = run(capsys, "normalize", "--delta", "0", "--theta", "0")
    assert code == 0 and "notchanged=true" in out
    code, out, _ = run(capsys, "normalize", "--delta", "01022101111", "--theta", "RR021210222")
    assert out.startswith("delta=01002210210111 theta=02R02120120222 ")


def test_normalize_trace_and_json(capsys):
    code, out, _ = run(capsys, "normalize", "--delta", "01022101111", "--theta", "RR021210222", "--trace")
    assert out.splitlines()[1:] == ["P9 at 0", "F3 at 5", "F3 at 7"]
    code, out, _ = run(capsys, "normalize", "--delta", "0001", "--theta", "R0R2", "--json")
    assert json.loads(out) == {"delta": "0001", "theta": "0002", "notchanged": False, "trace": []}


def test_normalize_binary(capsys):
    code, out, _ = run(capsys, "normalize", "--alphabet", "binary", "--delta", "01", "--theta", "RR")
    assert out == "delta=010 theta=RER notchanged=false\n"


@pytest.mark.parametrize(
    "argv, where",
    [
        (["--delta", "01x", "--theta", "RRR"], "position 2"),
        (["--delta", "01", "--theta", "RRR"], "differ in length"),
        (["--delta", "01", "--theta", "R5"], "position 1"),
        (["--delta", "01", "--theta", "R0", "--alphabet", "binary"], "position 1"),
        (["--delta", "01"], "required"),
    ],
)
def test_malformed_input(capsys, argv, where):
    code, out, err = run(capsys, "normalize", *argv)
    assert code == 2 and out == "" and where in err and err.count("\n") == 1


def test_generate(capsys):
    assert run(capsys, "generate", "--delta", "01021", "--theta", "R112R")[1] == "012012201201102102210210\n"
    assert run(capsys, "generate", "--delta", "", "--theta", "") == (0, "", "")
    assert run(capsys, "generate", "--delta", "00", "--theta", "00")[1] == "00\n"
    code, out, _ = run(capsys, "generate", "--delta", "01021", "--theta", "R112R", "--prefixes", "--limit", "6")
    assert out.split() == ["0", "012", "012012"]


def test_check(capsys):
    assert run(capsys, "check", "--delta", "0001", "--theta", "0002")[0] == 0
    assert run(capsys, "check", "--delta", "01021", "--theta", "R112R")[:2] == (1, "not normalized\n")
    assert run(capsys, "check", "--delta", "", "--theta", "")[0] == 0


def test_round_trip(capsys):
    _, out, _ = run(capsys, "normalize", "--delta", "2120", "--theta", "RR1R")
    fields = dict(kv.split("=") for kv in out.split())
    assert run(capsys, "check", "--delta", fields["delta"], "--theta", fields["theta"])[0] == 0


def test_compare(capsys):
    assert run(capsys, "compare", "--delta", "01021", "--theta", "R112R")[:2] == (0, "agree\n")


def test_fuzz(capsys):
    assert run(capsys, "fuzz", "--count", "200", "--max-len", "10", "--seed", "42") == (0, "200/200 agree\n", "")
    assert run(capsys, "fuzz", "--count", "0")[0] == 2
    first = run(capsys, "fuzz", "--count", "1", "--max-len", "1", "--seed", "7")
    assert first == run(capsys, "fuzz", "--count", "1", "--max-len", "1", "--seed", "7")
    assert run(capsys, "fuzz", "--count", "100", "--alphabet", "binary")[1] == "100/100 agree\n"


def test_batch(tmp_path, capsys):
    src = tmp_path / "cases.tsv"
    src.write_text("# header\n0001\tR0R2\n\n0\t0\n01022101111\tRR021210222\n")
    code, out, _ = run(capsys, "batch", "--input", str(src))
    assert code == 0
    assert out.splitlines() == ["0001\t0002\tfalse", "0\t0\ttrue", "01002210210111\t02R02120120222\tfalse"]
    code, out, _ = run(capsys, "batch", "--input", str(src), "--json")
    assert [json.loads(line)["line"] for line in out.splitlines()] == [2, 4, 5]


def test_batch_errors(tmp_path, capsys):
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    assert run(capsys, "batch", "--input", str(empty)) == (0, "", "")
    bad = tmp_path / "bad.tsv"
    bad.write_text("01\tRRR\n0\t0\nonlyone\n")
    code, out, _ = run(capsys, "batch", "--input", str(bad))
    lines = out.splitlines()
    assert code == 1 and lines[0].startswith("error\tline 1") and lines[1] == "0\t0\ttrue"
    assert lines[2].startswith("error\tline 3")
    assert run(capsys, "batch", "--input", str(tmp_path / "missing.tsv"))[0] == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pseudostandard", "normalize", "--delta", "0001", "--theta", "R0R2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "delta=0001 theta=0002 notchanged=false\n"
