import numpy as np
import pytest

from oppm.cli import main
from oppm.seqio import read_sequence, write_sequence


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "text.bin"
    code, _, _ = run(capsys, "gen", "--rand-delta", "20", "--n", "256", "--seed", "4", "--out", str(out))
    assert code == 0
    y = read_sequence(out)
    assert y.size == 256
    assert y.min() >= 80 and y.max() <= 120


def test_gen_text_mode(tmp_path, capsys):
    out = tmp_path / "text.txt"
    code, _, _ = run(capsys, "gen", "--period-delta", "5", "--n", "64", "--out", str(out), "--mode", "text")
    assert code == 0
    assert len(out.read_text().split()) == 64


def test_search_with_pattern_file(tmp_path, capsys):
    text = tmp_path / "y.bin"
    pat = tmp_path / "x.bin"
    write_sequence(text, np.array([8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26]))
    write_sequence(pat, np.array([6, 5, 8, 4, 7]))
    code, out, _ = run(capsys, "search", "--text", str(text), "--pattern", str(pat),
                       "--scheme", "no", "--q", "3", "--verify")
    assert code == 0
    assert "occurrences: [3]" in out
    assert "verification passed" in out


def test_search_extracted_pattern(capsys):
    code, out, _ = run(capsys, "search", "--rand-delta", "20", "--n", "4096",
                       "--pattern-len", "8", "--scheme", "nr", "--q", "3", "--verify")
    assert code == 0
    assert "verification passed" in out


def test_search_requires_q_for_nr(capsys):
    with pytest.raises(SystemExit):
        main(["search", "--rand-delta", "20", "--n", "128", "--pattern-len", "5", "--scheme", "nr"])


def test_search_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "search", "--text", "/nonexistent/seq.bin", "--pattern-len", "5")
    assert code == 2
    assert "error" in err


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--rand-delta", "20", "--n", "4096",
                       "--pattern-len", "8", "--pattern-count", "3", "--reps", "1", "--verify")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("scheme,q,m,")
    assert "speedup_vs_fct" in lines[0]
    assert len(lines) == 1 + 9


def test_bench_table_single_scheme(capsys):
    code, out, _ = run(capsys, "bench", "--rand-delta", "20", "--n", "2048",
                       "--pattern-len", "8", "--pattern-count", "2", "--reps", "1",
                       "--scheme", "no", "--q", "3", "--format", "table")
    assert code == 0
    assert "no3" in out and "fct" in out


def test_selftest_exit_zero(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def test_unknown_command_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
