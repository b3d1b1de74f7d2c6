import json
import os
import subprocess

import pytest

CLI = os.environ.get("MONCP_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="MONCP_CLI not set")


def run(*args, cwd):
    return subprocess.run([CLI, *map(str, args)], cwd=cwd, capture_output=True, text=True)


@pytest.fixture
def star(tmp_path):
    (tmp_path / "star.edges").write_text("c\tl1\nc\tl2\nc\tl3\nc\tl4\n")
    (tmp_path / "star.labels").write_text("l1\n")
    return tmp_path


def load(path):
    with open(path) as f:
        return json.load(f)


def test_solve_writes_result_and_manifest(star):
    r = run("solve", "--network", "star.edges", "--labels", "star.labels", "--model", "mds",
            "--seed", 5, "--pop", 20, "--aux", 10, "--budget", 2000, "--out", "r.json", cwd=star)
    assert r.returncode == 0, r.stderr
    doc = load(star / "r.json")
    assert doc["pf"] == [[1, 0], [2, 1]]
    assert doc["ps"] == [["c"], ["c", "l1"]]
    man = load(star / "r.json.manifest.json")
    assert man["seed"] == 5
    assert {i["role"] for i in man["inputs"]} == {"network", "labels"}
    assert man["outputs"][0]["path"] == "r.json"


def test_same_seed_byte_identical(star):
    common = ["solve", "--network", "star.edges", "--labels", "star.labels", "--seed", 9,
              "--pop", 20, "--aux", 10, "--budget", 1500]
    assert run(*common, "--out", "a.json", cwd=star).returncode == 0
    assert run(*common, "--out", "b.json", cwd=star).returncode == 0
    assert (star / "a.json").read_bytes() == (star / "b.json").read_bytes()


def test_replay_reproduces(star):
    run("solve", "--network", "star.edges", "--labels", "star.labels", "--pop", 20, "--aux", 10,
        "--budget", 1000, "--out", "auto.json", cwd=star)
    man = load(star / "auto.json.manifest.json")
    assert man["seed_source"] == "auto"
    r = run("replay", "auto.json.manifest.json", "--check", cwd=star)
    assert r.returncode == 0, r.stderr


def test_model_mismatch_exit_1(star):
    r = run("solve", "--network", "star.edges", "--model", "dfvs", "--undirected", "--out", "x.json", cwd=star)
    assert r.returncode == 1
    assert "directed" in r.stderr


def test_empty_feasible_set_exit_2(tmp_path):
    # random halves of 40 nodes essentially never cover 80 edges, and the
    # budget only pays for the initial populations
    edges = "".join(f"{i}\t{(i + 1) % 40}\n" for i in range(40))
    edges += "".join(f"{i}\t{(i + 7) % 40}\n" for i in range(40))
    (tmp_path / "cyc.edges").write_text(edges)
    r = run("solve", "--network", "cyc.edges", "--model", "ncua", "--seed", 1, "--pop", 4, "--aux", 2,
            "--budget", 8, "--out", "c.json", cwd=tmp_path)
    assert r.returncode == 2
    doc = load(tmp_path / "c.json")
    assert doc["feasible_found"] is False and doc["pf"] == []


def test_oracle_limit(tmp_path):
    assert run("gen-synthetic", "--nodes", 21, "--type", "er", "--p", 0.3, "--seed", 1, "--out", "g",
               cwd=tmp_path).returncode == 0
    r = run("oracle", "--network", "g.edges", "--nodes-file", "g.nodes", "--model", "mds", "--out", "o.json",
            cwd=tmp_path)
    assert r.returncode == 1


def test_gen_synthetic_deterministic(tmp_path):
    for prefix in ("a", "b"):
        assert run("gen-synthetic", "--nodes", 16, "--type", "er", "--p", 0.3, "--seed", 1, "--label-frac", 0.25,
                   "--out", prefix, cwd=tmp_path).returncode == 0
    for ext in ("edges", "nodes", "labels"):
        assert (tmp_path / f"a.{ext}").read_bytes() == (tmp_path / f"b.{ext}").read_bytes()
    assert len((tmp_path / "a.labels").read_text().split()) == 4


def test_label_frac_zero_warns(tmp_path):
    r = run("gen-synthetic", "--nodes", 10, "--seed", 1, "--label-frac", 0, "--out", "z", cwd=tmp_path)
    assert r.returncode == 0 and "warning" in r.stderr
    assert (tmp_path / "z.labels").read_text() == ""


def test_metrics_and_drugs(star):
    run("oracle", "--network", "star.edges", "--labels", "star.labels", "--out", "o.json", cwd=star)
    run("solve", "--network", "star.edges", "--labels", "star.labels", "--seed", 1, "--pop", 20, "--aux", 10,
        "--budget", 1000, "--out", "s.json", cwd=star)
    assert run("metrics", "s.json", "--out", "m", cwd=star).returncode == 1
    r = run("metrics", "s.json", "--reference", "o.json", "--out", "m", cwd=star)
    assert r.returncode == 0, r.stderr
    rep = load(star / "m.json")
    assert rep["runs"][0]["igd"] == 0
    assert (star / "m.tsv").exists()

    (star / "bad.json").write_text("{\"kind\": \"run_result\"}")
    assert run("metrics", "bad.json", "--union", "--out", "m", cwd=star).returncode == 1

    (star / "combos.tsv").write_text("d1\t1\tc,x\nd2\t0\ty\nd3\t1\tc\n")
    r = run("evaluate-drugs", "--result", "o.json", "--combos", "combos.tsv", "--out", "d", cwd=star)
    assert r.returncode == 0, r.stderr
    rep = load(star / "d.json")
    assert rep["drivers"] == ["c"]
    assert rep["auc"] == 1.0

    (star / "one.tsv").write_text("d1\t1\tc\nd2\t1\ty\n")
    r = run("evaluate-drugs", "--result", "o.json", "--combos", "one.tsv", "--out", "d1", cwd=star)
    assert r.returncode == 0 and "undefined" in r.stderr
    assert load(star / "d1.json")["auc"] is None


def test_config_file_and_override(star):
    (star / "run.cfg").write_text("pop=12\naux=6\nbudget=300\nseed=3\n")
    r = run("solve", "--config", "run.cfg", "--aux", 4, "--network", "star.edges", "--out", "c.json", cwd=star)
    assert r.returncode == 0, r.stderr
    cfg = load(star / "c.json")["config"]
    assert (cfg["pop"], cfg["aux"], cfg["budget"], cfg["seed"]) == (12, 4, 300, 3)


def test_baseline_commands(star):
    r = run("baseline", "--network", "star.edges", "--labels", "star.labels", "--out", "b.json", cwd=star)
    assert r.returncode == 0
    assert load(star / "b.json")["drivers"] == ["c"]
    assert run("baseline", "--network", "star.edges", "--method", "mms", "--out", "m.json", cwd=star).returncode == 1
