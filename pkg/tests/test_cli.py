import json

import pytest

from app.core.config import settings
from scripts.palctl import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def test_generate(capsys):
    assert run(["generate", "--source", "period-doubling", "--length", "8"]) == EXIT_OK
    assert capsys.readouterr().out == "01000101\n"


def test_generate_json_with_parameters(capsys):
    code = run(["generate", "--source", "paperfolding", "--instructions", "0(01)", "--length", "8",
                "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out)["prefix"] == "00110110"


def test_generate_to_file(tmp_path, capsys):
    out = tmp_path / "nested" / "fib.txt"
    assert run(["generate", "--source", "fibonacci", "--length", "8", "--out", str(out)]) == EXIT_OK
    assert out.read_text(encoding="utf-8") == "01001010\n"
    assert capsys.readouterr().out == ""


def test_complexity_csv(capsys):
    code = run(["complexity", "--source", "period-doubling", "--max-k", "6", "--budget", "4096", "--format", "csv"])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,fac,pal,prefix_len,stable"
    assert [line.split(",")[2] for line in lines[1:]] == ["2", "1", "3", "0", "4", "0"]


def test_complexity_ratios(capsys):
    code = run(["complexity", "--source", "fibonacci", "--max-k", "2", "--budget", "4096", "--ratios"])
    assert code == EXIT_OK
    rows = capsys.readouterr().out.splitlines()
    assert rows[1].split()[:4] == ["1", "2", "2", "1/1"]


def test_maximal_palindromes(capsys):
    code = run(["palindromes", "--source", "pansiot-quadratic", "--max-k", "20", "--budget", "65536", "--maximal"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[:2] == ["1 0", "4 1001"]


def test_periods(capsys):
    assert run(["periods", "--word", "01101"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "period: 3" in out
    assert "periods: 3 5" in out


def test_periods_of_even_period_palindrome(capsys):
    assert run(["periods", "--word", "01100110", "--format", "json"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["class"] == "even_period"
    assert result["twin"] == "10011001"


def test_classp(morphism_file, capsys):
    path = morphism_file("alphabet: 0 1\nrule: 0 -> 0 1\nrule: 1 -> 0 0\nseed: 0\n")
    assert run(["classp", "--file", str(path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() != ""


def test_classp_normalize_outside_class_p(morphism_file):
    path = morphism_file("alphabet: a b\nrule: a -> a b\nrule: b -> b a\nseed: a\n")
    assert run(["classp", "--file", str(path), "--normalize", "--test-length", "4"]) == EXIT_USAGE


@pytest.mark.parametrize("argv, code", [
    (["verify", "--check", "twin"], EXIT_OK),
    (["verify", "--check", "droubay-pirillo", "--source", "period-doubling", "--max-k", "12",
      "--budget", "4096"], EXIT_FAIL),
    (["verify", "--check", "general", "--source", "kolakoski", "--max-k", "8", "--budget", "4096"], EXIT_USAGE),
])
def test_verify_exit_codes(argv, code, capsys):
    assert run(argv) == code
    assert json.loads(capsys.readouterr().out)["check"] == argv[2]


@pytest.mark.parametrize("argv", [
    ["generate", "--source", "no-such-sequence", "--length", "8"],
    ["complexity", "--source", "fibonacci", "--max-k", "64", "--budget", "100"],
    ["verify", "--check", "no-such-check"],
    ["periods", "--word", ""],
    ["periods", "--word", "   "],
    ["complexity", "--source", "fibonacci", "--max-k", "8", "--budget", str(settings.GENERATOR_MAX_LENGTH + 1)],
    ["frobnicate"],
])
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_budget_above_generator_cap_is_rejected_up_front(capsys):
    code = run(["verify", "--check", "cassaigne", "--source", "thue-morse",
                "--budget", str(settings.GENERATOR_MAX_LENGTH * 2)])
    assert code == EXIT_USAGE
    assert "GENERATOR_MAX_LENGTH" in capsys.readouterr().err
