import json

import pytest

import liepair.cli as cli
from liepair.errors import InternalInvariantError
from liepair.fixtures import BUILDERS, build
from liepair.loader import load_chart

from conftest import fixture_path


def run(argv):
    return cli.main(argv)


def test_fixture_files_match_builders():
    for name in BUILDERS:
        chart = load_chart(fixture_path(name))
        a, b = chart.alg, build(name)
        assert (a.n, a.s, a.t) == (b.n, b.s, b.t), name
        assert a.rho == b.rho, name
        assert a.C == b.C, name
        assert a.Gamma == b.Gamma, name
        assert a.matched == b.matched, name


def test_validate_ok_and_broken(capsys):
    assert run(["validate", "--input", fixture_path("point_aff1")]) == 0
    out = capsys.readouterr().out
    assert "PASS jacobi" in out and "result: ok" in out

    assert run(["validate", "--input", fixture_path("broken_jacobi")]) == 1
    out = capsys.readouterr().out
    assert "FAIL jacobi" in out and "result: failed" in out


def test_missing_file_is_exit_2(capsys):
    assert run(["validate", "--input", fixture_path("no_such_fixture")]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_schema_is_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"rank_B": 1, "unknown_key": 3}')
    assert run(["validate", "--input", str(p)]) == 2
    assert "unknown keys" in capsys.readouterr().err

    p2 = tmp_path / "bad2.json"
    p2.write_text("not json at all")
    assert run(["validate", "--input", str(p2)]) == 2


def test_bad_flag_values_are_usage_errors():
    with pytest.raises(SystemExit) as e:
        run(["fedosov", "--input", fixture_path("point_aff1"), "--max-b-degree", "1"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["fedosov", "--input", fixture_path("point_aff1"), "--gamma-param", "x"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["verify", "--input", fixture_path("point_aff1"), "--suite", "nope"])
    assert e.value.code == 2


def test_internal_invariant_is_exit_3(monkeypatch, capsys):
    def boom(path, param_overrides=None):
        raise InternalInvariantError("synthetic failure")

    monkeypatch.setattr(cli, "load_chart", boom)
    assert run(["validate", "--input", fixture_path("point_aff1")]) == 3
    assert "internal invariant" in capsys.readouterr().err


def test_gamma_param_overrides_file(capsys):
    assert (
        run(
            [
                "fedosov",
                "--input",
                fixture_path("point_aff1"),
                "--gamma-param",
                "3/2",
                "--max-b-degree",
                "3",
            ]
        )
        == 0
    )
    out = capsys.readouterr().out
    assert "gamma=3/2" in out
    assert "-3/4*alpha1*b1^2" in out


def test_json_output_to_file_and_determinism(tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    argv = [
        "verify",
        "--input",
        fixture_path("two_action"),
        "--suite",
        "atiyah",
        "--format",
        "json",
    ]
    assert run(argv + ["--output", str(out1)]) == 0
    assert run(argv + ["--output", str(out2)]) == 0
    d1 = json.loads(out1.read_text())
    d2 = json.loads(out2.read_text())
    d1.pop("elapsed_seconds")
    d2.pop("elapsed_seconds")
    assert d1 == d2
    assert d1["passed"] is True
    assert all(c["passed"] for c in d1["checks"])


def test_verify_suites_exit_codes():
    assert run(["verify", "--input", fixture_path("aff_pair"), "--suite", "ddg"]) == 0
    assert (
        run(["verify", "--input", fixture_path("broken_jacobi"), "--suite", "fedosov"])
        == 1
    )


def test_atiyah_reports_both_cocycles(capsys):
    assert (
        run(
            [
                "atiyah",
                "--input",
                fixture_path("aff_pair"),
                "--gamma-param",
                "2",
                "--format",
                "json",
            ]
        )
        == 0
    )
    payload = json.loads(capsys.readouterr().out)
    assert payload["pair_cocycle"]["alpha1; (1,1)->1"] == "-2"
    assert payload["dg_cocycle_restricted"]["(1,1)->1"] == "-2*alpha1"
    names = [c["name"] for c in payload["checks"]]
    assert "cocycle_comparison" in names and payload["passed"]


def test_atiyah_unmatched_reports_dg_only(capsys):
    assert run(["atiyah", "--input", fixture_path("heisenberg")]) == 0
    out = capsys.readouterr().out
    assert "dg_cocycle_restricted" in out
    assert "pair_cocycle" not in out


def test_symmetrize_connection_round_trip(tmp_path):
    # a torsionful connection is accepted once the flag symmetrizes it
    data = json.loads(open(fixture_path("aff_pair")).read())
    data["christoffel"]["1,2,1"] = "3"
    data["christoffel"]["2,1,1"] = "1"
    p = tmp_path / "torsionful.json"
    p.write_text(json.dumps(data))
    assert run(["validate", "--input", str(p)]) == 1

    data["symmetrize_connection"] = True
    p.write_text(json.dumps(data))
    assert run(["validate", "--input", str(p)]) == 0
