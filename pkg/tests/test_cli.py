"""CLI subcommands run in-process: outputs, config merge, exit codes."""

import json
import os

import numpy as np
import pytest

from expsumlab import ValueTable, chowla2_one_closed_form
from expsumlab.cli import main


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, json.loads(out)


def test_sieve_dump_and_checksum(capsys, tmp_path):
    dump = os.path.join(tmp_path, "lam.bin")
    rc, doc = run_json(capsys, [
        "sieve", "--kind", "liouville", "--start", "1", "--stop", "1000",
        "--dump", dump,
    ])
    assert rc == 0
    assert doc["payload"]["results"]["length"] == 999
    table = ValueTable.load(dump)
    assert table.kind == "liouville"
    assert len(table.values) == 999


def test_uniformity_csv_row(capsys):
    rc = main([
        "uniformity", "--spec", "liouville", "--X", "100000", "--H", "32",
        "--seed", "5", "--size", "8",
    ])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[0] == "X,H,M,seed,tau,U,q10,q50,q90"
    fields = out[1].split(",")
    assert fields[:4] == ["100000", "32", "8", "5"]
    assert 0.0 <= float(fields[5]) <= 1.0


def test_uniformity_missing_seed_fails(capsys):
    rc = main(["uniformity", "--spec", "liouville", "--X", "100000",
               "--H", "32"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "seed" in err


def test_config_file_provides_defaults_and_flags_win(capsys, tmp_path):
    cfg = os.path.join(tmp_path, "cfg.json")
    with open(cfg, "w") as fh:
        json.dump({"X": 100000, "H": 32, "seed": 5, "size": 8}, fh)
    rc = main(["uniformity", "--spec", "liouville", "--config", cfg,
               "--size", "4"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[1].split(",")[2] == "4"  # flag overrides config size
    # config alone satisfies the required --X
    rc2 = main(["uniformity", "--spec", "liouville", "--config", cfg])
    out2 = capsys.readouterr().out.strip().splitlines()
    assert rc2 == 0
    assert out2[1].split(",")[2] == "8"


def test_triple_check_identity_passes(capsys):
    rc = main(["triple", "--f", "liouville", "--a", "one", "--b", "one",
               "--X", "2000", "--H", "16", "--check-identity"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[0] == "X,H,f,a,b,value_direct,value_spectral,rel_gap,normalized"


def test_triple_check_identity_needs_both_paths(capsys):
    rc = main(["triple", "--f", "one", "--a", "one", "--b", "one",
               "--X", "100", "--H", "8", "--check-identity", "--direct-only"])
    assert rc == 2
    assert "both paths" in capsys.readouterr().err


def test_chowla2_json(capsys):
    rc, doc = run_json(capsys, [
        "chowla2", "--spec", "one", "--X", "500", "--H", "10",
    ])
    assert rc == 0
    stat = doc["payload"]["results"]["statistic"]
    assert stat == pytest.approx(chowla2_one_closed_form(500, 10), rel=1e-12)


def test_distance_csv(capsys):
    rc = main(["distance", "--spec", "char", "--modulus", "3", "--index", "1",
               "--X", "2000", "--Q", "3", "--tmax", "2", "--tol", "0.01",
               "--format", "csv"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[0] == "spec,X,Q,t_max,tol,D,argmin_t,argmin_q,argmin_index"
    d = float(out[1].split(",")[5])
    assert d == pytest.approx(1 / np.sqrt(3), abs=0.02)


def test_walks_complete_graph(capsys):
    rc, doc = run_json(capsys, ["walks", "--complete", "4", "--k", "2", "3"])
    assert rc == 0
    res = doc["payload"]["results"]
    assert res[0]["walks"] == 36 and res[1]["walks"] == 108
    assert res[0]["margin"] == "0/1"


def test_graph_then_walks_roundtrip(capsys, tmp_path):
    edges_csv = os.path.join(tmp_path, "edges.csv")
    rc = main([
        "graph", "--X", "2000000", "--H", "64", "--family", "strict",
        "--seed", "3", "--size", "16", "--p1", "11", "--p2", "22",
        "--synthetic-T", "500", "--out", edges_csv, "--format", "csv",
    ])
    assert rc == 0
    with open(edges_csv) as fh:
        assert fh.readline().startswith("i,j,p1,p2,")
    assert os.path.exists(edges_csv + ".meta.json")
    rc2, doc = run_json(capsys, [
        "walks", "--edges", edges_csv, "--n", "16", "--k", "2",
    ])
    assert rc2 == 0
    assert doc["payload"]["results"][0]["n_vertices"] == 16


def test_msd_json(capsys):
    rc, doc = run_json(capsys, [
        "msd", "--spec", "liouville", "--x", "10000", "--H", "64",
    ])
    assert rc == 0
    assert doc["payload"]["results"]["x"] == 10000
    assert doc["payload"]["results"]["lhs"] >= 0


def test_l3check_json(capsys):
    rc, doc = run_json(capsys, [
        "l3check", "--a", "one", "--x", "1000", "--H", "64",
    ])
    assert rc == 0
    assert doc["payload"]["results"]["grid"] == 16 * 64


def test_fitmodel_synthetic(capsys):
    rc, doc = run_json(capsys, [
        "fitmodel", "--X", "500000", "--H", "500", "--seed", "40",
        "--size", "32", "--synthetic-T", "4321", "--synthetic-q", "2",
    ])
    assert rc == 0
    fit = doc["payload"]["results"]
    assert fit["q"] == 2
    assert abs(fit["T"] - 4321.0) < 1e-3
    assert fit["score"] == 32


def test_primeproducts_json(capsys):
    rc, doc = run_json(capsys, [
        "primeproducts", "--k", "2", "--p1", "50", "--p2", "100",
        "--C", "1", "--N", "50",
    ])
    assert rc == 0
    res = doc["payload"]["results"]
    assert res["count"] >= res["n_primes"] ** 2  # diagonal pairs qualify


def test_theta_resolves_H(capsys):
    rc = main(["uniformity", "--spec", "one", "--X", "100000",
               "--theta", "0.5", "--seed", "1", "--size", "4"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[1].split(",")[1] == "316"  # floor(100000^0.5)


def test_archdemo_runs(capsys):
    rc = main(["archdemo", "--X", "100000", "--H", "100", "--t", "1000",
               "--seed", "2", "--size", "8"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert float(out[1].split(",")[5]) > 0.9


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_unknown_spec_fails_cleanly(capsys):
    rc = main(["uniformity", "--spec", "bogus", "--X", "100000", "--H", "32",
               "--seed", "1"])
    assert rc == 2
    assert "unknown spec" in capsys.readouterr().err
