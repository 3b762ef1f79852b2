import io
import subprocess
import sys

import pytest

from misbound.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def test_bound():
    assert run(["bound", "7"]) == (0, "12\n")
    assert run(["bound", "--table", "3"]) == (0, "0 1\n1 1\n2 2\n3 3\n")
    assert run(["bound", "200"])[0] == 1


def test_bound_check():
    code, out = run(["bound", "--check"])
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_bound_usage():
    assert run(["bound"])[0] == 2


def test_generate():
    assert run(["generate", "moon-moser", "3"]) == (0, "Bw\n")
    assert run(["generate", "complete", "4"]) == (0, "C~\n")
    assert run(["generate", "moon-moser", "1"])[0] == 1
    assert run(["generate", "path", "3", "--format", "edgelist"]) == (0, "n 3\n0 1\n1 2\n")


def test_count():
    _, m7 = run(["generate", "moon-moser", "7"])
    _, c5 = run(["generate", "cycle", "5"])
    assert run(["count", "--algo", "pivot"], m7) == (0, "12\n")
    assert run(["count", "--algo", "oracle"], c5) == (0, "5\n")
    assert run(["count", "--graph6", "Bw"]) == (0, "3\n")


def test_count_stats():
    code, out = run(["count", "--algo", "branching", "--stats", "--graph6", "Bw"])
    assert code == 0
    assert out.splitlines() == ["3", "candidates_generated: 3", "recursive_calls: 3", "max_depth: 1"]


def test_count_usage_errors():
    assert run(["count"], "")[0] == 2
    assert run(["count", "some.g6", "--graph6", "Bw"])[0] == 2


def test_count_file_and_edge_list(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("n 3\n0 1\n1 2\n")
    assert run(["count", str(f)]) == (0, "2\n")
    assert run(["count", "--format", "edgelist"], "n 3\n0 1\n1 2\n") == (0, "2\n")
    assert run(["count", str(tmp_path / "missing")])[0] == 1
    assert run(["count"], "n 2\n0 0\n")[0] == 1
    assert run(["count", "--graph6", "Bx"])[0] == 1
    assert run(["count", "--graph6", "Bx", "--lenient"]) == (0, "3\n")


def test_enumerate():
    assert run(["enumerate", "--graph6", "Bg"]) == (0, "1\n0 2\n")  # P_3
    assert run(["enumerate", "--graph6", "Bw"]) == (0, "0\n1\n2\n")
    assert run(["enumerate"], "n 3\n") == (0, "0 1 2\n")


@pytest.mark.parametrize("algo", ["oracle", "branching", "pivot"])
def test_enumerate_algorithms_agree(algo):
    assert run(["enumerate", "--algo", algo, "--graph6", "Bg"]) == (0, "1\n0 2\n")


def test_verify(tmp_path):
    code, out = run(["verify", "4"])
    assert code == 0
    assert "max_count_observed: 4\n" in out and "bound: 4\n" in out and "graphs_checked: 64\n" in out
    assert run(["verify", "9"])[0] == 1
    assert run(["verify", "8"])[0] == 1
    w = tmp_path / "w.g6"
    code, out = run(["verify", "2", "--witnesses", str(w), "--jobs", "1"])
    assert "max_count_observed: 2\n" in out
    assert w.read_text() == "A_\n"


def test_verify_deterministic():
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("elapsed")]
    assert strip(run(["verify", "5"])[1]) == strip(run(["verify", "5", "--algo", "oracle"])[1])


def test_bench():
    code, out = run(["bench", "--family", "moon-moser", "--n-min", "9", "--n-max", "21", "--algo", "pivot"])
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert rows[0] == ["n", "count", "seconds", "ratio"]
    assert [int(r[1]) for r in rows[1:]] == [27, 81, 243, 729, 2187]
    assert rows[1][3] == "-"
    code, out = run(["bench", "--family", "complete", "--n-min", "4", "--n-max", "8"])
    assert [int(line.split("\t")[1]) for line in out.splitlines()[1:]] == [4, 5, 6, 7, 8]
    assert run(["bench", "--n-min", "5", "--n-max", "3"])[0] == 2


def test_bound_violation_exit(monkeypatch, capsys):
    import misbound.enumeration as enumeration

    monkeypatch.setattr(enumeration, "bound_g", lambda n: 1)
    assert run(["count", "--graph6", "Bw"])[0] == 1
    assert "Theorem 1" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "misbound", "bound", "8"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "18\n"
    proc = subprocess.run([sys.executable, "-m", "misbound", "frobnicate"], capture_output=True)
    assert proc.returncode == 2
