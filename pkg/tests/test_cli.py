"""Command-line behavior: exit codes, output shape and determinism."""

import json

import pytest

from hilb3.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_catalog_plain(capsys):
    code, out = run_cli(capsys, "catalog")
    assert code == 0
    assert "fixed points: 21" in out
    assert "invariant curves: 15" in out


def test_catalog_json(capsys):
    code, out = run_cli(capsys, "catalog", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "1"
    assert payload["summary"]["fixed_points"] == 21
    assert len(payload["curves"]) == 15


def test_invariant_plain(capsys):
    code, out = run_cli(capsys, "invariant", "--d", "1")
    assert code == 0
    assert "invariant = -27" in out


def test_invariant_json_shape(capsys):
    code, out = run_cli(capsys, "invariant", "--d", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2
    assert payload["ab"] == "81/2"
    assert payload["invariant"] == "27/2"
    assert payload["verified_constant"] is True
    assert len(payload["specializations"]) == 3
    for row in payload["specializations"]:
        assert set(row) == {"w", "z", "total"}
        assert row["total"] == "81/2"


def test_invariant_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "invariant", "--d", "1", "--json")
    _, second = run_cli(capsys, "invariant", "--d", "1", "--json")
    assert first == second


def test_graphs_empty_listing_is_success(capsys):
    # The far-stratum family has no graphs in degree one; an empty listing
    # is an answer, not an error.
    code, out = run_cli(
        capsys, "graphs", "--family", "T", "--i", "0", "--j", "1", "--k", "2", "--d", "1"
    )
    assert code == 0
    assert "0 stable graphs" in out


def test_graphs_json_counts(capsys):
    code, out = run_cli(
        capsys, "graphs", "--family", "pair", "--i", "0", "--j", "1", "--d", "2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 3
    assert len(payload["graphs"]) == 3
    orders = sorted(g["automorphisms"] for g in payload["graphs"])
    assert orders == [1, 1, 2]


def test_graphs_alias_matches_long_name(capsys):
    _, alias = run_cli(
        capsys, "graphs", "--family", "S", "--i", "0", "--j", "1", "--d", "2", "--json"
    )
    _, full = run_cli(
        capsys, "graphs", "--family", "pair", "--i", "0", "--j", "1", "--d", "2", "--json"
    )
    assert alias == full


def test_graphsum_json(capsys):
    code, out = run_cli(
        capsys, "graphsum", "--family", "pair", "--i", "0", "--j", "1", "--d", "1", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) >= {"family", "d", "specialization", "value"}
    assert "/" in payload["value"] or payload["value"].lstrip("-").isdigit()


def test_verify_passes(capsys):
    code, out = run_cli(capsys, "verify", "--dmax", "1")
    assert code == 0
    assert "FAIL" not in out
    assert "identities hold" in out


def test_verify_json(capsys):
    code, out = run_cli(capsys, "verify", "--dmax", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert all(c["passed"] for c in payload["checks"])


def test_table_markdown(capsys):
    code, out = run_cli(capsys, "table", "--dmax", "2", "--markdown")
    assert code == 0
    assert "| class |" in out or "| first class |" in out
    assert "f(1) = -27" in out
    assert "f(2) = 27" in out


def test_table_json_selects_kind(capsys):
    code, out = run_cli(capsys, "table", "--dmax", "1", "--kind", "two", "--json")
    assert code == 0
    payload = json.loads(out)
    assert "two_point" in payload
    assert "one_point" not in payload
    assert payload["two_point"]["zero_pairs"] == 27


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["graphs", "--family", "pair", "--i", "0", "--d", "1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["graphs", "--family", "nope", "--i", "0", "--j", "1", "--d", "1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["invariant", "--d", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["table", "--dmax", "9"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_pair_family_rejects_extra_stratum():
    with pytest.raises(SystemExit) as info:
        main(["graphs", "--family", "pair", "--i", "0", "--j", "1", "--k", "2", "--d", "1"])
    assert info.value.code == 2
