"""End-to-end command checks: exit codes, schemas, determinism."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

CLI = [sys.executable, "-m", "coringlab.cli"]


def run_cli(*args):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, timeout=300
    )


def run_json(*args):
    return run_cli(*args, "--format", "json")


def test_demo_trig_passes():
    r = run_json("demo", "trig")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["schema"] == "coring-lab/1"
    assert doc["command"] == "demo"
    assert doc["ok"] is True
    assert all(c["ok"] for c in doc["checks"])


def test_demo_byte_determinism():
    a = run_json("demo", "trig")
    b = run_json("demo", "trig")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_correspondence_jobs_determinism(tmp_path):
    outs = []
    for jobs in ("1", "2"):
        r = run_json("correspondence", "aomega", "--n", "2", "--jobs", jobs)
        assert r.returncode == 0, r.stderr
        outs.append(r.stdout)
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    rows = {row["instance"]: row for row in doc["extensions"]}
    assert rows["M_n(C(alpha))"]["J_dim"] == 14
    assert rows["k"]["R_dim"] == 2
    assert all(row["roundtrip_RJ"] and row["roundtrip_JR"] for row in rows.values())
    jb = {row["instance"]: row for row in doc["jacobson_bourbaki"]}
    assert jb["M_n(k)"]["U_dim"] == 4


def test_demo_embed_h_odd_rank_fails_with_2():
    r = run_json("demo", "embed-H", "--n", "3")
    assert r.returncode == 2
    doc = json.loads(r.stdout)
    assert doc["ok"] is False
    assert doc["error"]["type"] == "OddRankForH"


def test_classify_counts():
    for n, count in ((1, 2), (2, 4), (3, 3)):
        r = run_json("classify", "--base-pair", "QiQ", "--n", str(n))
        assert r.returncode == 0, r.stderr
        doc = json.loads(r.stdout)
        assert doc["classes"] == count and doc["expected_classes"] == count
        assert doc["ok"] is True


def test_classify_bad_n_is_usage_error():
    r = run_cli("classify", "--base-pair", "QiQ", "--n", "4")
    assert r.returncode == 1
    assert "n <= 3" in r.stderr


def test_unknown_instance_rejected_before_computation():
    r = run_cli("demo", "no-such-thing")
    assert r.returncode == 1
    assert "invalid choice" in r.stderr


def test_text_format_and_output_file(tmp_path):
    out = tmp_path / "report.txt"
    r = run_cli("demo", "t2-counterexample", "--format", "text",
                "--output", str(out))
    assert r.returncode == 0
    text = out.read_text()
    assert "overall: PASS" in text
    assert "coring-lab demo" in text


def good_instance_doc():
    from coringlab.examples import aomega_instance

    inst = aomega_instance(2)
    span = inst.fixture_coideal("C(alpha)")
    gens = [[str(Fraction(c)) for c in row] for row in span.rows]
    avec = lambda *cs: [str(Fraction(c)) for c in cs]
    return {
        "schema": "coring-lab/1",
        "instance": "aomega",
        "params": {"n": 2, "field": "Q", "omega": -1, "alpha": -1, "beta": -1},
        "subalgebras": [
            {"name": "twist-line", "matrices": [
                [[avec(0, 1), avec(0, 0)], [avec(0, 0), avec(0, -1)]]
            ]}
        ],
        "coideals": [{"name": "alpha-rows", "generators": gens}],
    }


def test_check_command_on_valid_file(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(good_instance_doc()))
    r = run_json("check", "--input", str(path))
    assert r.returncode == 0, r.stdout + r.stderr
    doc = json.loads(r.stdout)
    assert doc["subalgebras"][0]["ok"] and doc["subalgebras"][0]["dim"] == 2
    assert doc["coideals"][0]["ok"] and doc["coideals"][0]["dim"] == 8


def test_correspondence_from_file(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(good_instance_doc()))
    r = run_json("correspondence", "--input", str(path))
    assert r.returncode == 0, r.stdout + r.stderr
    doc = json.loads(r.stdout)
    assert doc["extensions"][0]["J_dim"] == 8
    assert doc["coideals"][0]["roundtrip_JR"] is True


def test_non_coideal_generators_reported_with_index(tmp_path):
    doc = good_instance_doc()
    doc["subalgebras"] = []
    v = ["0"] * 16
    v[0] = "1"
    doc["coideals"] = [{"name": "broken", "generators": [v]}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    r = run_json("correspondence", "--input", str(path))
    assert r.returncode == 2
    out = json.loads(r.stdout)
    err = out["coideals"][0]["error"]
    assert err["type"] == "NotACoideal"
    assert err["generator_index"] == 0


def test_schema_error_pointers(tmp_path):
    bad = {"schema": "coring-lab/1", "instance": "aomega",
           "params": {"n": 2, "gamma": 5}}
    path = tmp_path / "schema_bad.json"
    path.write_text(json.dumps(bad))
    r = run_cli("check", "--input", str(path))
    assert r.returncode == 1
    assert "/params/gamma" in r.stderr

    bad2 = {"schema": "coring-lab/0"}
    path2 = tmp_path / "schema_bad2.json"
    path2.write_text(json.dumps(bad2))
    r2 = run_cli("check", "--input", str(path2))
    assert r2.returncode == 1
    assert "/schema" in r2.stderr

    path3 = tmp_path / "vec_bad.json"
    doc3 = good_instance_doc()
    doc3["coideals"] = [{"name": "short", "generators": [["1", "0"]]}]
    path3.write_text(json.dumps(doc3))
    r3 = run_cli("correspondence", "--input", str(path3))
    assert r3.returncode == 1
    assert "/coideals/0/generators/0" in r3.stderr


def test_missing_input_file():
    r = run_cli("check", "--input", "/nonexistent/nothing.json")
    assert r.returncode == 1


def test_rationals_serialized_as_strings():
    r = run_json("demo", "aomega", "--n", "2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    params = doc["params"]
    assert params["alpha"] == ["-1/1"]
    assert params["n"] == 2
