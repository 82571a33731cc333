"""Tests for the command-line surface.

Run:
  python -m magnons.cli.test
"""

import io
import json
from contextlib import redirect_stderr, redirect_stdout
from typing import List, Tuple

from magnons.errors import InvalidInputError, InvalidSizeError, ResourceLimitError
from magnons.tests.utils import expect_error


def _run(argv: List[str]) -> Tuple[int, str, str]:
    from .main import main

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_run_config() -> None:
    from .config import ALL, ROW, RunConfig, RunMode

    assert [t.inline() for t in RunConfig(n=3).labels()] == ["(123)", "(13/2)", "(12/3)"]
    assert [t.inline() for t in RunConfig(n=3, selector=ROW).labels()] == ["(123)"]
    assert [t.inline() for t in RunConfig(n=5, selector=4).labels()] == ["(1235/4)"]
    assert RunConfig(n=4, selector=ALL, output="json").output.value == "json"
    expect_error(InvalidSizeError, RunConfig, n=1)
    expect_error(InvalidInputError, RunConfig, n=5, selector=7)
    expect_error(InvalidInputError, RunConfig, n=5, selector="hook")
    expect_error(ResourceLimitError, RunConfig, n=6, mode=RunMode.VERIFY, cap=5)
    RunConfig(n=6, mode=RunMode.CLOSED, cap=5)
    print("✅ run config OK")


def test_cmd_state() -> None:
    from .commands import cmd_state
    from .config import ROW, RunConfig

    assert cmd_state(RunConfig(n=5, selector=4)) == "|(1235/4)⟩ = √3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)"
    assert cmd_state(RunConfig(n=2, selector=ROW)) == "|(12)⟩ = √2/2 (|1⟩+|2⟩)"
    assert len(cmd_state(RunConfig(n=5)).splitlines()) == 5
    assert cmd_state(RunConfig(n=5, selector=4, mode="verify", cap=14)).startswith("|(1235/4)⟩")
    assert "0.8660254038 |4⟩" in cmd_state(RunConfig(n=5, selector=4, mode="numeric"))

    data = json.loads(cmd_state(RunConfig(n=6, selector=3, output="json")))
    assert data["n"] == 6
    assert [(a["sign"], a["p"], a["q"]) for a in data["amplitudes"]] == [
        (-1, 1, 6),
        (-1, 1, 6),
        (1, 2, 3),
        (0, 0, 1),
        (0, 0, 1),
        (0, 0, 1),
    ]
    expect_error(InvalidInputError, cmd_state, RunConfig(n=5, output="dot"))
    print("✅ state command OK")


def test_cmd_rs() -> None:
    from .commands import cmd_rs

    lines = cmd_rs("00100").splitlines()
    assert len(lines) == 6
    assert lines[-1] == "RS(00100) = ((0000/1), (1235/4))"
    assert cmd_rs("") == "RS() = (∅, ∅)"
    assert cmd_rs("01010").splitlines()[-1] == "RS(01010) = ((000/11), (124/35))"
    assert cmd_rs("00100", two_line=True).splitlines()[:2] == ["12345", "00100"]
    assert json.loads(cmd_rs("00100", "json"))["q"]["rows"] == [[1, 2, 3, 5], [4]]
    print("✅ rs command OK")


def test_cmd_graph() -> None:
    from .commands import cmd_graph
    from .config import RunConfig

    dot = cmd_graph(RunConfig(n=5, selector=3, output="dot"))
    assert dot.startswith('graph "(1245/3)" {')
    assert 'label="2/3"' in dot and "style=dashed" in dot
    assert cmd_graph(RunConfig(n=4, output="dot")).count("graph ") == 4

    data = json.loads(cmd_graph(RunConfig(n=5, selector=5, output="json", mode="verify")))
    assert len(data["edges"]) == 10
    numeric = json.loads(cmd_graph(RunConfig(n=5, selector=5, output="json", mode="numeric")))
    assert "exact" not in numeric["edges"][0]
    assert "isolated: 4, 5" in cmd_graph(RunConfig(n=5, selector=3))
    print("✅ graph command OK")


def test_cmd_table() -> None:
    from .commands import cmd_table
    from .config import RunConfig

    rows = json.loads(cmd_table(RunConfig(n=5, output="json", mode="verify")))["rows"]
    assert [r["label"] for r in rows] == ["(1345/2)", "(1245/3)", "(1235/4)", "(1234/5)", "(12345)"]
    assert [[(w["class"], w["exact"]) for w in r["weights"]] for r in rows] == [
        [("C2", "1")],
        [("C1", "1/3"), ("C2", "2/3")],
        [("C1", "1/6"), ("C2", "1/2")],
        [("C1", "1/10"), ("C2", "2/5")],
        [("C", "2/5")],
    ]
    assert all(r["max_delta"] < 1e-9 for r in rows)

    lines = cmd_table(RunConfig(n=2)).splitlines()[2:]
    assert [line.split()[:2] for line in lines] == [["(1/2)", "1"], ["(12)", "1"]]
    assert "C2=1 (1)" in lines[0] and "C=1 (1)" in lines[1]
    assert cmd_table(RunConfig(n=5)) == cmd_table(RunConfig(n=5))
    print("✅ table command OK")


def test_main_exit_codes() -> None:
    code, out, err = _run(["state", "--n", "5", "--second-row", "4"])
    assert code == 0 and out == "|(1235/4)⟩ = √3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)\n"

    code, out, err = _run(["rs", "0120"])
    assert code == 2 and out == "" and "non-binary" in err

    code, _, err = _run(["state", "--n", "5", "--second-row", "9"])
    assert code == 2

    code, _, err = _run(["verify", "--n-max", "20", "--cap", "14"])
    assert code == 1 and "cap" in err

    code, out, err = _run(["verify", "--n-max", "3", "--check", "kostka", "--format", "json"])
    assert code == 0 and json.loads(out)["passed"] is True
    assert "[kostka]" in err

    try:
        _run(["state"])
    except SystemExit as e:
        assert e.code == 2
    else:
        raise AssertionError("argparse accepted a missing --n")
    print("✅ exit codes OK")


def main() -> None:
    print("\n=== CLI Tests ===")
    test_run_config()
    test_cmd_state()
    test_cmd_rs()
    test_cmd_graph()
    test_cmd_table()
    test_main_exit_codes()
    print("\n✅ All CLI tests passed.")


if __name__ == "__main__":
    main()
