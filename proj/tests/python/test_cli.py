import json
import os
import re
import subprocess

import pytest

EXE = os.environ.get("FIBERDIM_EXE", "fiberdim")
ERROR_LINE = re.compile(r'^error: code=[a-z_]+ exit=\d message="(?:[^"\\]|\\.)*"$')

IDEAL = "n = 2\nN = 1\ngen = (z1)\ngen = (z2)\n"
VECTOR = "n = 2\nN = 2\n# one generator\ngen = (z1, z2)\n"
PAIR_A = "n = 1\nN = 2\ngen = (1, 0)\ngen = (0, z1)\n"
PAIR_B = "n = 1\nN = 2\ngen = (0, 1)\n"
MIXED = "n = 2\nN = 1\ngen = (z1 + 1)\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [("ideal", IDEAL), ("vector", VECTOR), ("a", PAIR_A), ("b", PAIR_B), ("mixed", MIXED)]:
        path = tmp_path / f"{name}.mod"
        path.write_text(text)
        out[name] = str(path)
    return out


def run(*args, cache=None):
    env = dict(os.environ)
    if cache is not None:
        env["FIBERDIM_CACHE_DIR"] = str(cache)
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=env, timeout=120)


def check_error(proc, code, status):
    assert proc.returncode == status
    lines = proc.stderr.strip().splitlines()
    assert len(lines) == 1
    assert ERROR_LINE.match(lines[0]), lines[0]
    assert f"code={code} exit={status}" in lines[0]
    assert proc.stdout == ""


def test_fd_human_output(files):
    p = run("fd", files["ideal"], "--no-cache")
    assert p.returncode == 0
    assert "  fd: 1" in p.stdout
    assert re.search(r"^elapsed_ms: \d+$", p.stdout, re.M)


def test_json_is_byte_identical(files, tmp_path):
    cache = tmp_path / "cache"
    outs = [
        run("--json", "fd", files["vector"], "--no-cache").stdout,
        run("fd", files["vector"], "--json", cache=cache).stdout,
        run("fd", files["vector"], "--json", cache=cache).stdout,
    ]
    assert any(cache.iterdir())
    assert outs[0] == outs[1] == outs[2]
    report = json.loads(outs[0])
    assert report["results"]["fd"] == 1
    assert "elapsed" not in outs[0]


def test_cache_does_not_change_hilbert(files, tmp_path):
    a = run("hilbert", files["ideal"], "--json", cache=tmp_path).stdout
    b = run("hilbert", files["ideal"], "--json", cache=tmp_path).stdout
    c = run("hilbert", files["ideal"], "--json", "--no-cache").stdout
    assert a == b == c


def test_seed_is_reported(files):
    r = json.loads(run("fd", files["ideal"], "--json", "--seed", "7", "--no-cache").stdout)
    assert r["seed"] == 7
    assert r["results"]["fd"] == 1


def test_samuel_and_lattice(files):
    s = json.loads(run("samuel", files["vector"], "--json", "--no-cache").stdout)["results"]
    assert (s["c_S"], s["c_T"]) == (1, 2)
    lat = json.loads(run("lattice", files["a"], files["b"], "--witness", "--json", "--no-cache").stdout)["results"]
    assert lat["equality_holds"]
    w = json.loads(run("witness", files["a"], files["b"], "--json", "--no-cache").stdout)["results"]
    assert w["witnesses"] == ["(0, z1)"]


def test_model_kernel(files):
    p = run("model", "drury-arveson", files["ideal"], "--kernel-at", "1/2,0;1,7", "--json", "--no-cache")
    assert p.returncode == 0
    r = json.loads(p.stdout)["results"]
    assert r["projection"]["dims"][:5] == [0, 0, 2, 5, 9]
    assert r["kernel_evaluations"][0]["z"] == ["1/2", "0"]


def test_translate_warns(files):
    p = run("fd", files["vector"], "--translate", "1,-1/2", "--json", "--no-cache")
    assert p.returncode == 0
    assert p.stderr.startswith("warning: inhomogeneous input")
    assert json.loads(p.stdout)["results"]["fd"] == 1


def test_inhomogeneous_graded_command(files):
    check_error(run("hilbert", files["mixed"], "--no-cache"), "invalid_input", 2)
    p = run("fd", files["mixed"], "--json", "--no-cache")
    assert p.returncode == 0
    assert json.loads(p.stdout)["results"]["methods"]["hilbert_leading"] is None


def test_parse_error_has_position(tmp_path):
    bad = tmp_path / "bad.mod"
    bad.write_text("n = 2\nN = 1\ngen = (1.5*z1)\n")
    p = run("fd", str(bad), "--no-cache")
    check_error(p, "parse_error", 2)
    assert "line 3, column 9" in p.stderr


def test_exit_codes(files):
    check_error(run("fd", "/nonexistent/x.mod", "--no-cache"), "parse_error", 2)
    check_error(run("model", "nope", files["ideal"], "--no-cache"), "invalid_input", 2)
    check_error(run("lattice", files["ideal"], files["b"], "--no-cache"), "shape_mismatch", 3)
    p = run("hilbert", files["ideal"], "--max-degree", "1", "--no-cache")
    check_error(p, "cap_too_small", 4)
    assert "raise --max-degree" in p.stderr
    check_error(run("fd"), "usage_error", 2)
    check_error(run("fd", files["ideal"], "--seed", "x"), "usage_error", 2)


def test_help():
    p = run("--help")
    assert p.returncode == 0
    assert "lattice" in p.stdout


SAMPLES = os.path.join(os.path.dirname(__file__), "..", "..", "docs", "modules")


@pytest.mark.parametrize("name", sorted(os.listdir(SAMPLES)))
def test_sample_modules_run(name):
    p = run("fd", os.path.join(SAMPLES, name), "--json", "--no-cache")
    assert p.returncode == 0, p.stderr
    assert json.loads(p.stdout)["results"]["all_agree"]
