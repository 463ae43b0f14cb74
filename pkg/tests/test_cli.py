import re

import pytest

from dirainbow.cli import EXIT_FALSIFIED, EXIT_OK, EXIT_USAGE, main
from dirainbow.io import format_digraph
from dirainbow.digraph import dicycle
from dirainbow.solver import ENV_BUDGET


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cycle5(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(format_digraph(dicycle(5)))
    return str(path)


def test_compute_prints_result_line(capsys, cycle5, tmp_path):
    witness = tmp_path / "w.txt"
    code, out, _ = run(capsys, "compute", "--kind", "trc", "--input", cycle5, "--witness", str(witness))
    assert code == EXIT_OK
    assert re.fullmatch(r"result TRC 10 true \d+\n", out)
    code, out, _ = run(capsys, "verify", "--kind", "trc", "--input", cycle5, "--coloring", str(witness))
    assert code == EXIT_OK and out == "ok\ncolors 10\n"


def test_verify_reports_failing_pair(capsys, cycle5, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("".join(f"a {i} {(i + 1) % 5} 0\n" for i in range(5)))
    code, out, _ = run(capsys, "verify", "--kind", "rc", "--input", cycle5, "--coloring", str(bad))
    assert code == EXIT_FALSIFIED
    assert out == "fail 0 2\ncolors 1\n"


def test_family_files_round_trip(capsys, tmp_path):
    g, c = tmp_path / "g.txt", tmp_path / "c.txt"
    code, _, _ = run(
        capsys, "family", "--name", "tournament_TNk", "--params", "k=7",
        "--with-coloring", "--output", str(g), "--coloring-output", str(c),
    )
    assert code == EXIT_OK
    code, out, _ = run(capsys, "verify", "--kind", "strc", "--input", str(g), "--coloring", str(c))
    assert code == EXIT_OK and out == "ok\ncolors 7\n"
    code, out, _ = run(capsys, "family", "--name", "tournament_TNk", "--params", "k=7")
    assert out == g.read_text()


def test_family_without_scheme_is_a_usage_error(capsys):
    code, _, err = run(capsys, "family", "--name", "bio_cycle", "--params", "n=5", "--with-coloring")
    assert code == EXIT_USAGE and err


def test_cactus_report(capsys):
    code, out, _ = run(capsys, "cactus", "--qnql", "7,3,1,base", "--colorings")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "is_cactus true" in lines and "q 3" in lines
    assert "special_path false" in lines
    assert "# coloring RVC ok" in lines


def test_cactus_rejects_non_cactus(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("n 4\na 0 1\na 1 2\na 2 3\na 3 0\na 0 2\na 1 3\n")
    code, out, _ = run(capsys, "cactus", "--input", str(path))
    assert code == EXIT_OK
    assert out.startswith("is_cactus false\n")


def test_budget_exceeded_exits_with_usage_code(capsys, cycle5):
    code, out, _ = run(capsys, "compute", "--kind", "trc", "--input", cycle5, "--max-elements", "3")
    assert code == EXIT_USAGE and out.startswith("budget_exceeded")


def test_environment_budget(capsys, cycle5, monkeypatch):
    monkeypatch.setenv(ENV_BUDGET, "4")
    code, out, _ = run(capsys, "compute", "--kind", "rc", "--input", cycle5)
    assert code == EXIT_USAGE and out.startswith("budget_exceeded")


def test_usage_errors(capsys, cycle5, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--kind", "bogus", "--input", cycle5])
    assert exc.value.code == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\nb 0 1\n")
    code, _, err = run(capsys, "compute", "--kind", "rc", "--input", str(bad))
    assert code == EXIT_USAGE and "line 2" in err


def _strip_times(text):
    return re.sub(r" \d+\.\d+s ", " ", text)


def test_check_is_deterministic_under_seed(capsys):
    code, first, _ = run(capsys, "check", "--seed", "3", "--only", "1,6")
    assert code == EXIT_OK
    _, second, _ = run(capsys, "check", "--seed", "3", "--only", "1,6")
    assert _strip_times(first) == _strip_times(second)
    assert first.splitlines()[0] == "seed 3"
    assert first.splitlines()[-1] == "summary 2/2 pass"
