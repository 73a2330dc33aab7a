import json

import numpy as np
import pytest

from qsvand.cli import EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, main
from qsvand.instance_io import (dumps_instance, format_matrix, load_instance,
                                loads_instance, parse_matrices)
from qsvand.displacement import canonical_vq_generators, materialize
from qsvand.poly_systems import monomial
from support import random_instance


def _gen(tmp_path, name="inst.json", *extra):
    path = tmp_path / name
    assert main(["gen", "--out", str(path), *extra]) == EXIT_OK
    return path


def test_gen_is_deterministic(tmp_path):
    a = _gen(tmp_path, "a.json", "--family", "wf", "--n", "6", "--seed", "4")
    b = _gen(tmp_path, "b.json", "--family", "wf", "--n", "6", "--seed", "4")
    assert a.read_text() == b.read_text()
    assert load_instance(a).n == 6


def test_gen_rejects_empty(tmp_path, capsys):
    assert main(["gen", "--n", "0", "--out", str(tmp_path / "x.json")]) == EXIT_INPUT
    assert "n must be" in capsys.readouterr().err


def test_invert_verify_canonical_monomial(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(dumps_instance(canonical_vq_generators(monomial(3), [1.0, 2.0, 3.0])))
    assert main(["invert", str(path), "--verify"]) == EXIT_OK
    out = capsys.readouterr()
    Rinv = parse_matrices(out.out)["Rinv"]
    V = np.vander([1.0, 2.0, 3.0], increasing=True)
    assert np.allclose(V @ Rinv, np.eye(3), atol=1e-10)
    assert "verify: ok" in out.err


def test_repeated_node_is_numerical_failure(tmp_path, capsys):
    doc = json.loads(dumps_instance(random_instance("qs", 4, 1, np.random.default_rng(0))))
    doc["nodes"][2] = doc["nodes"][0]
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    assert main(["invert", str(path)]) == EXIT_INPUT
    assert main(["invert", str(path), "--no-validate"]) == EXIT_NUMERIC
    assert "numerical failure" in capsys.readouterr().err


@pytest.mark.parametrize("text", ["{", "[]", '{"schema_version": 1}', ""])
def test_malformed_files(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    assert main(["verify", str(path)]) == EXIT_INPUT


def test_missing_file(tmp_path):
    assert main(["factor", str(tmp_path / "nope.json")]) == EXIT_INPUT


def test_factor_output(tmp_path):
    path = _gen(tmp_path, "f.json", "--n", "7", "--alpha", "2", "--seed", "1")
    out = tmp_path / "plu.txt"
    assert main(["factor", str(path), "--out", str(out)]) == EXIT_OK
    blocks = parse_matrices(out.read_text())
    perm = blocks["perm"].astype(int).ravel() - 1
    L, U = blocks["L"], blocks["U"]
    R = materialize(load_instance(path))
    # replay the recorded swaps
    order = np.arange(7)
    for k, p in enumerate(perm):
        order[[k, p]] = order[[p, k]]
    assert np.abs(R[order] - L @ U).max() <= 1e-9 * np.abs(R).max()


def test_verify_subcommand(tmp_path, capsys):
    path = _gen(tmp_path, "v.json", "--n", "5", "--seed", "2", "--canonical")
    assert main(["verify", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "plu_error" in out and "verify: ok" in out


def test_tolerance_override(tmp_path, monkeypatch, capsys):
    path = _gen(tmp_path, "t.json", "--n", "6", "--seed", "3")
    monkeypatch.setenv("QSVAND_TOL", "0")
    assert main(["invert", str(path), "--verify"]) == EXIT_NUMERIC
    monkeypatch.setenv("QSVAND_TOL", "abc")
    assert main(["invert", str(path), "--verify"]) == EXIT_INPUT


def test_instance_roundtrip_exact(rng):
    inst = random_instance("ss", 6, 2, rng)
    back = loads_instance(dumps_instance(inst))
    assert np.array_equal(back.G, inst.G) and np.array_equal(back.B, inst.B)
    assert np.array_equal(back.nodes, inst.nodes)
    for name in ("alpha", "beta", "gamma", "delta", "theta"):
        assert np.array_equal(getattr(back.sys, name), getattr(inst.sys, name))


def test_matrix_dump_roundtrip_exact(rng):
    A = rng.standard_normal((4, 3)) * 10.0 ** rng.integers(-200, 200, (4, 3))
    text = format_matrix("A", A) + format_matrix("b", np.arange(3.0))
    back = parse_matrices(text)
    assert np.array_equal(back["A"], A)
    assert back["b"].shape == (1, 3)


def test_bench_single_size(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--sizes", "16", "--reps", "1", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "n,fast_seconds,oracle_seconds,fitted_exponent"
    fields = lines[1].split(",")
    assert fields[0] == "16" and float(fields[1]) > 0 and fields[3] == ""


def test_bench_two_sizes(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--sizes", "16,32", "--reps", "1", "--out", str(out)]) == EXIT_OK
    rows = [ln.split(",") for ln in out.read_text().splitlines()[1:]]
    assert len(rows) == 2 and rows[0][3] == rows[1][3] != ""
