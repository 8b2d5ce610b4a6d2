import csv
import io
import json
import subprocess
import sys

import pytest

from convexcount import count_rect
from convexcount.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("count", "rect", "1", "1"), "5\n"),
        (("count", "perimeter", "0"), "7\n"),
        (("count", "rect", "0", "0"), "1\n"),
        (("count", "rect", "2", "2", "--route", "quadruple"), "68\n"),
        (("count", "rect", "1", "2", "--route", "bruteforce"), "13\n"),
        (("count", "perimeter", "2", "--route", "bruteforce"), "120\n"),
        (("count", "perimeter", "5", "--route", "quadruple"), f"{sum(count_rect(m, 7 - m) for m in range(8))}\n"),
    ],
)
def test_count(argv, expected):
    assert run(*argv) == (0, expected)


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "rect", "1"),
        ("count", "perimeter", "1", "2"),
        ("count", "rect", "-1", "2"),
        ("count", "rect", "x", "2"),
        ("count", "rect", "1", "1", "--route", "magic"),
        ("breakdown", "0", "1"),
        ("verify", "nope"),
        ("verify", "lemma1", "--dump"),
        ("table", "--m", "3..1"),
        ("table", "--routes", "closed,bogus"),
        (),
    ],
)
def test_usage_errors(argv, capsys):
    code, out = run(*argv)
    assert code == 2
    assert out == ""


def test_feasibility_exit(monkeypatch):
    assert run("count", "rect", "7", "6", "--route", "bruteforce")[0] == 3
    monkeypatch.setenv("CONVEXCOUNT_MAX_BRUTE", "2")
    assert run("enumerate", "2", "1", "--format", "count")[0] == 3
    assert run("table", "--m", "0..2", "--n", "0..2", "--routes", "closed,bruteforce")[0] == 3
    assert run("count", "perimeter", "1", "--route", "bruteforce")[0] == 3


def test_breakdown_1_1():
    code, out = run("breakdown", "1", "1")
    assert code == 0
    assert out == (
        "m=1 n=1\n"
        "S0 3\n"
        "S1 raw 2 closed 2\n"
        "S2 raw 1 closed 1\n"
        "S3 raw 1 closed 1\n"
        "S4 raw 0 closed 0\n"
        "S5 raw 0 closed 0\n"
        "quadruple 5\n"
        "closed 5\n"
        "PASS\n"
    )


def test_breakdown_5_3():
    code, out = run("breakdown", "5", "3")
    assert code == 0
    assert out.endswith("PASS\n")
    assert f"closed {count_rect(5, 3)}\n" in out


def test_breakdown_reports_failure(monkeypatch):
    from convexcount import counting

    monkeypatch.setattr(counting, "s2_closed", lambda m, n: 0)
    code, out = run("breakdown", "2", "2")
    assert code == 1
    assert out.splitlines()[-1].startswith("FAIL")


def test_table_closed_default():
    code, out = run("table")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "n", "closed"]
    assert len(rows) == 17
    assert rows[1:3] == [["0", "0", "1"], ["0", "1", "1"]]
    assert ["1", "1", "5"] in rows


def test_table_routes_agree():
    code, out = run("table", "--m", "0..3", "--n", "0..3", "--routes", "closed,bruteforce")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 16
    assert all(r["agree"] == "yes" for r in rows)
    assert all(r["closed"] == r["bruteforce"] for r in rows)


def test_table_json_roundtrip():
    code, out = run("table", "--m", "1..2", "--n", "0..1", "--routes", "closed,quadruple", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [(r["m"], r["n"]) for r in data] == [(1, 0), (1, 1), (2, 0), (2, 1)]
    assert all(r["agree"] is True and r["closed"] == r["quadruple"] for r in data)
    assert json.loads(json.dumps(data)) == data


def test_table_flags_disagreement(monkeypatch):
    from convexcount import counting

    monkeypatch.setattr(counting, "quadruple_sum", lambda m, n: 0)
    code, out = run("table", "--m", "1", "--n", "1", "--routes", "closed,quadruple")
    assert code == 4
    assert out == "m,n,closed,quadruple,agree\n1,1,5,0,no\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "bisection", "--degree", "14"),
        ("verify", "jacobi", "--alpha", "1", "--beta", "1", "--degree", "12"),
        ("verify", "lemma1", "--max", "5"),
        ("verify", "eq-delta", "--degree", "8"),
        ("verify", "s3-gf", "--degree", "8"),
        ("verify", "s4-gf", "--degree", "8"),
        ("verify", "decomposition", "--max", "4"),
        ("verify", "chu-vandermonde", "--samples", "50", "--seed", "3"),
        ("verify", "telescoping", "--max", "6"),
    ],
)
def test_verify_pass(argv):
    assert run(*argv) == (0, "PASS\n")


def test_verify_failure_prints_counterexample(monkeypatch):
    from convexcount import counting

    monkeypatch.setattr(counting, "s3_closed", lambda m, n: 0)
    code, out = run("verify", "eq-delta", "--degree", "4")
    assert code == 1
    assert out.startswith("FAIL eq-delta vs S3 closed form at (1, 1)")


def test_verify_dump():
    code, out = run("verify", "bisection", "--degree", "2", "--dump")
    assert code == 0
    assert out == "0 0 1/1\n0 1 1/1\n1 0 1/1\n0 2 1/1\n1 1 6/1\n2 0 1/1\nPASS\n"


def test_enumerate():
    assert run("enumerate", "1", "1", "--format", "count") == (0, "5\n")
    assert run("enumerate", "0", "0") == (0, "#\n")
    code, out = run("enumerate", "1", "1")
    blocks = out.rstrip("\n").split("\n\n")
    assert code == 0
    assert len(blocks) == 5
    assert blocks[0] == "##\n##"
    assert sorted(blocks[1:]) == sorted(["#.\n##", ".#\n##", "##\n#.", "##\n.#"])
    for block in blocks:
        assert all(line == line.rstrip() and len(line) == 2 for line in block.splitlines())


def test_deterministic():
    for argv in (("enumerate", "2", "2"), ("table", "--format", "json"), ("breakdown", "3", "4")):
        assert run(*argv) == run(*argv)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "convexcount", "count", "rect", "1", "1"], capture_output=True, text=True
    )
    assert (proc.returncode, proc.stdout) == (0, "5\n")
    proc = subprocess.run([sys.executable, "-m", "convexcount", "breakdown", "0", "1"], capture_output=True, text=True)
    assert proc.returncode == 2 and "m, n >= 1" in proc.stderr
