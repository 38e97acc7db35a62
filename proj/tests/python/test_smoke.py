"""Python smoke tests for the compiled module and the CLI."""

import json
import os
import subprocess

import pytest

try:
    import chainsemi as cs
except ImportError:  # in-tree runs import the extension module directly
    import _chainsemi as cs


def test_make_compose_classify():
    alpha = cs.PartialMap(3, [(1, 1), (3, 3)])
    beta = cs.PartialMap(3, [(1, 1), (2, 2), (3, 2)])
    product = alpha * beta
    assert product == cs.PartialMap(3, [(1, 1), (3, 2)])
    props = product.classify()
    assert props["contraction"] and props["order_preserving"]
    assert not props["isometry"]
    assert beta.is_idempotent()
    assert not product.is_idempotent()


def test_canonical_ids_round_trip():
    alpha = cs.PartialMap(3, [(1, 1), (3, 3)])
    assert alpha.canonical_id == 49
    assert cs.decode(3, 49) == alpha
    assert cs.identity(2).canonical_id == 7


def test_enumerate_counts():
    assert len(cs.enumerate_ids("p", 2)) == 9
    assert len(cs.enumerate_ids("cp", 3)) == 50
    assert len(cs.enumerate_ids("ocp", 3)) == 34
    assert len(cs.enumerate_ids("orcp", 3)) == 46


def test_bad_input_raises():
    with pytest.raises(cs.ChainsemiError):
        cs.PartialMap(3, [(1, 4)])
    with pytest.raises(ValueError):
        cs.enumerate_ids("nope", 2)


def test_star_classes_agree():
    for relation in ("lstar", "rstar", "hstar", "dstar"):
        by_oracle = cs.star_classes("cp", 3, relation, method="oracle")
        by_char = cs.star_classes("cp", 3, relation, method="characterization")
        assert by_oracle == by_char


def test_abundance_boundary():
    assert cs.abundance("cp", 3, "right")["abundant"]
    verdict = cs.abundance("cp", 4, "right")
    assert not verdict["abundant"]
    assert verdict["witness_class"] == [188, 344, 436, 592]


def test_regularity():
    gap = cs.PartialMap(3, [(1, 3), (3, 1)])
    verdict = cs.is_strongly_regular(gap)
    assert verdict["regular"] and not verdict["strongly_regular"]
    assert len(cs.sreg_ids(3)) == 39


def test_verify_all_claims_small():
    results = cs.verify(n_min=1, n_max=3)
    assert results, "claim run came back empty"
    assert all(r["status"] != "fail" for r in results)
    assert {r["claim_id"] for r in results} == set(cs.claim_ids())


CLI = os.environ.get("CHAINSEMI_CLI")


@pytest.mark.skipif(CLI is None, reason="CHAINSEMI_CLI not set")
def test_cli_enumerate_deterministic(tmp_path):
    def run_once(path):
        subprocess.run(
            [CLI, "enumerate", "--family", "orcp", "--n", "3", "--out", str(path)],
            check=True,
        )
        return path.read_bytes()

    first = run_once(tmp_path / "a.json")
    second = run_once(tmp_path / "b.json")
    assert first == second
    payload = json.loads(first)
    assert payload["schema"] == "chainsemi/1"
    assert payload["count"] == 46


@pytest.mark.skipif(CLI is None, reason="CHAINSEMI_CLI not set")
def test_cli_exit_codes(tmp_path):
    ok = subprocess.run(
        [CLI, "verify", "--claims", "closure", "--family", "cp", "--n", "3"],
        capture_output=True,
    )
    assert ok.returncode == 0

    budget = subprocess.run(
        [CLI, "enumerate", "--family", "cp", "--n", "7"], capture_output=True
    )
    assert budget.returncode == 3

    io_err = subprocess.run(
        [CLI, "enumerate", "--family", "cp", "--n", "2", "--out",
         str(tmp_path / "missing" / "out.json")],
        capture_output=True,
    )
    assert io_err.returncode == 4
