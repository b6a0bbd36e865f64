import io
import json
import subprocess
import sys

import pytest

from hecke_spheres.cli import main


def run(*args):
    out = io.StringIO()
    code = main(list(args), out=out)
    return code, out.getvalue()


def run_process(*args, env=None):
    return subprocess.run([sys.executable, "-m", "hecke_spheres.cli", *args],
                          capture_output=True, text=True, env=env)


def test_spherical_table_n1():
    code, text = run("table", "--kind", "spherical", "--n", "1")
    assert code == 0
    doc = json.loads(text)
    assert [r["values"] for r in doc["rows"]] == [["1", "1"], ["1", "(-1)/(p)"]]


def test_character_table_n1_csv():
    code, text = run("table", "--kind", "characters", "--n", "1", "--format", "csv")
    assert code == 0
    assert text == "y,x=+,x=-\n+,1,p\n-,1,-1\n"


def test_preset_table_is_rational():
    code, text = run("table", "--kind", "spherical", "--n", "2", "--preset", "B", "--q0", "3")
    assert code == 0
    doc = json.loads(text)
    assert doc["specialization"] == {"p": "3", "q": "3"}
    assert doc["specialized"][1] == ["1", "1/6", "-1/9"]


def test_vanishing_denominator_exit_code(capsys):
    code, _ = run("table", "--kind", "spherical", "--n", "2", "--p-half", "0", "--q-half", "1")
    assert code == 1
    assert "f=1" in capsys.readouterr().err


@pytest.mark.parametrize("args,expected", [
    (("--f", "0", "--d", "5", "--n", "7"), "1"),
    (("--f", "1", "--d", "1", "--n", "1"), "(-1)/(p)"),
    (("--f", "1", "--d", "0", "--n", "3"), "1"),
    (("--f", "1", "--d", "1", "--n", "1", "--p-half", "2", "--q-half", "1"), "-1/4"),
])
def test_krawtchouk_command(args, expected):
    code, text = run("krawtchouk", *args)
    assert code == 0 and text == expected + "\n"


@pytest.mark.parametrize("args", [
    ("krawtchouk", "--f", "4", "--d", "0", "--n", "3"),
    ("verify", "--n", "0", "--suite", "all"),
    ("verify", "--n", "3", "--suite", "nope"),
    ("verify", "--n", "9"),
    ("table", "--kind", "spherical", "--n", "2", "--preset", "B"),
    ("table", "--kind", "spherical", "--n", "2", "--preset", "B", "--q0", "0"),
    ("table", "--kind", "spherical", "--n", "2", "--p-half", "1"),
    ("table", "--kind", "nope", "--n", "2"),
    ("krawtchouk", "--f", "1", "--d", "1", "--n", "1", "--a", "p+"),
    (),
])
def test_usage_errors(args):
    code, text = run(*args)
    assert code == 2 and text == ""


def test_verify_small():
    code, text = run("verify", "--n", "2", "--suite", "krawtchouk")
    doc = json.loads(text)
    assert code == 0 and doc["pass"]
    assert any("eval = recurrence" in c["check"] for c in doc["checks"])
    assert "elapsed_ms" not in doc
    code, text = run("verify", "--n", "2", "--suite", "coxeter", "--timing")
    assert "elapsed_ms" in json.loads(text)


def test_determinism_and_process_contract():
    a = run_process("verify", "--n", "3", "--suite", "spherical")
    b = run_process("verify", "--n", "3", "--suite", "spherical")
    assert a.returncode == 0 and a.stdout == b.stdout
    t1 = run_process("table", "--kind", "characters", "--n", "3")
    t2 = run_process("table", "--kind", "characters", "--n", "3")
    assert t1.stdout == t2.stdout and t1.stderr == ""
    bad = run_process("verify", "--n", "0")
    assert bad.returncode == 2 and bad.stdout == "" and "error" in bad.stderr


def test_env_cap(monkeypatch):
    import os
    env = dict(os.environ, HECKE_SPHERES_MAX_N="2")
    r = run_process("table", "--kind", "spherical", "--n", "3", env=env)
    assert r.returncode == 2 and "cap is n <= 2" in r.stderr
