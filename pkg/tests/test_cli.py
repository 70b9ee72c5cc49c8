import json
import subprocess
import sys

import pytest

from suffixearley.cli import main
from suffixearley.families import WORKED_EXAMPLE
from suffixearley.grammar import parse_grammar


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"anbn": "S -> a S b | \n", "long": "S -> A B C D\n",
                       "worked": WORKED_EXAMPLE, "loop": "S -> S\n", "one": "S -> a\n",
                       "amb": "S -> S S | a\n", "eps": "S ->\n"}.items():
        paths[name] = tmp_path / f"{name}.cfg"
        paths[name].write_text(text)
    return paths


def run(*args):
    return subprocess.run([sys.executable, "-m", "suffixearley", *map(str, args)],
                          capture_output=True, text=True)


def test_parse_accept_reject_black_box(files):
    r = run("parse", files["anbn"], "--algorithm", "earley", "--input", "a a b b")
    assert (r.returncode, r.stdout) == (0, "accept\n")
    r = run("parse", files["anbn"], "--algorithm", "earley", "--input", "a b b")
    assert (r.returncode, r.stdout) == (1, "reject\n")


def test_parse_unknown_terminal(files, capsys):
    assert main(["parse", str(files["anbn"]), "--input", "a x"]) == 2
    assert "'x'" in capsys.readouterr().err


def test_parse_variant_stats(files, capsys):
    assert main(["parse", str(files["anbn"]), "--algorithm", "variant", "--input", "a b",
                 "--stats"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "accept"
    stats = json.loads(out[1])
    assert {f"steps{k}" for k in range(1, 7)} <= set(stats)


def test_parse_dump_chart(files, capsys):
    assert main(["parse", str(files["anbn"]), "--input", "a b", "--dump-chart"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1:] == sorted(out[1:]) and "0 2 S -> a S b ." in out


def test_parse_tau2_and_input_file(files, tmp_path, capsys):
    sent = tmp_path / "s.txt"
    sent.write_text("a a b b\n")
    assert main(["parse", str(files["anbn"]), "--algorithm", "tau2-earley",
                 "--input-file", str(sent)]) == 0
    assert capsys.readouterr().out == "accept\n"


def test_missing_grammar_file(tmp_path):
    assert main(["parse", str(tmp_path / "nope.cfg"), "--input", "a"]) == 2


def test_usage_error_exit_code():
    assert run("parse").returncode == 2


@pytest.mark.parametrize("fmt, check", [
    ("csv", lambda t: t.splitlines()[0].count(",") == 10),
    ("md", lambda t: t.startswith("| G |")),
    ("json", lambda t: len(json.loads(t)[0]) == 11),
])
def test_compare_formats(files, tmp_path, fmt, check):
    sent = tmp_path / "s.txt"
    out = tmp_path / f"report.{fmt}"
    assert main(["generate", str(files["worked"]), "--count", "5", "--seed", "1",
                 "--max-len", "6", "--out", str(sent)]) == 0
    assert main(["compare", str(files["worked"]), str(sent), "--format", fmt,
                 "--out", str(out)]) == 0
    assert check(out.read_text())


def test_compare_missing_sentence_file(files, tmp_path):
    assert main(["compare", str(files["worked"]), str(tmp_path / "none.txt")]) == 2


def test_compare_disagreement_exit_code(files, tmp_path, monkeypatch):
    import suffixearley.bench as bench
    real = bench.recognize_variant

    def lying(g, w):
        u, t, s = real(g, w)
        s.accepted = not s.accepted
        return u, t, s
    monkeypatch.setattr(bench, "recognize_variant", lying)
    sent = tmp_path / "s.txt"
    sent.write_text("a\n")
    assert main(["compare", str(files["one"]), str(sent)]) == 3


def test_transform(files, tmp_path):
    out = tmp_path / "t.cfg"
    assert main(["transform", str(files["long"]), "--out", str(out)]) == 0
    assert "[C.D] -> C D" in out.read_text().splitlines()


@pytest.mark.parametrize("text", ["S -> a b | A\nA -> c S |\n", "S ->\n"])
def test_transform_is_identity_on_two_normal_form(tmp_path, text):
    src, out = tmp_path / "g.cfg", tmp_path / "t.cfg"
    src.write_text(text)
    assert main(["transform", str(src), "--out", str(out)]) == 0
    assert set(parse_grammar(out.read_text()).rules()) == set(parse_grammar(text).rules())


def test_generate_deterministic(files, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        assert main(["generate", str(files["anbn"]), "--count", "20", "--seed", "7",
                     "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_single(files, tmp_path):
    out = tmp_path / "o.txt"
    assert main(["generate", str(files["one"]), "--count", "1", "--out", str(out)]) == 0
    assert out.read_text() == "a\n"


def test_generate_empty_language(files):
    assert main(["generate", str(files["loop"])]) == 4


@pytest.mark.parametrize("name, text, expected", [("amb", "a a a", "2"), ("one", "a", "1"),
                                                  ("one", "b", "0")])
def test_count_parses(files, capsys, name, text, expected):
    if text == "b":
        # "b" is not even a terminal of S -> a; use a grammar that knows it
        files[name].write_text("S -> a\nT -> b\n")
    assert main(["count-parses", str(files[name]), "--input", text]) == 0
    assert capsys.readouterr().out.strip() == expected


def test_count_parses_cap(files, capsys):
    assert main(["count-parses", str(files["amb"]), "--input", " ".join(["a"] * 65)]) == 2
    assert "cap" in capsys.readouterr().err
