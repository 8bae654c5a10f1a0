"""End-to-end command line behavior: subcommands, exit codes, report formats."""

import json
from pathlib import Path

import pytest

from malgebra.cli import main
from malgebra.models import dump_model, load_model

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURE_DIR / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# exit code 0: everything passes -------------------------------------------------


def test_check_passes_on_theory_fixture(capsys):
    code, out, _ = run(capsys, "check", fixture_path("t2"))
    assert code == 0
    assert "Idempotence: PASS (checked 256)" in out
    assert out.rstrip().endswith("overall: PASS")


def test_check_passes_on_ray_fixture(capsys):
    code, out, _ = run(capsys, "check", fixture_path("r3"))
    assert code == 0
    assert "Interference: PASS (sampled)" in out


def test_check_all_axioms_on_smallest_fixture(capsys):
    code, out, _ = run(capsys, "check", fixture_path("f1"), "--axioms", "all")
    assert code == 0
    assert "L-Cumulativity" in out and "Strong Separability" in out


# exit code 1: property failures --------------------------------------------------


def test_separability_failure_exits_one(capsys):
    code, out, _ = run(
        capsys, "check", fixture_path("t2"), "--axioms", "separability"
    )
    assert code == 1
    assert "Separability: FAIL" in out
    assert "witness=(" in out
    assert out.rstrip().endswith("overall: FAIL")


def test_failure_report_in_json(capsys):
    code, out, _ = run(
        capsys, "check", fixture_path("t2"), "--axioms", "separability",
        "--format", "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["overall"] == "fail"
    check = payload["checks"][0]
    assert check["property"] == "separability"
    assert check["witnesses"], "witness tuples must be reported"
    assert all(isinstance(w, list) for w in check["witnesses"])


# exit code 2: input problems ------------------------------------------------------


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "check", "no-such-file.json")
    assert code == 2
    assert "no-such-file.json" in err


def test_invalid_json_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "line" in err


def test_duplicate_keys_exit_two(tmp_path, capsys):
    bad = tmp_path / "dupe.json"
    bad.write_text(
        '{"kind":"table","states":["0","a"],"zero":"0",'
        '"measurements":{"m":{"0":"0","a":"a"},"m":{"0":"0","a":"0"}}}'
    )
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "duplicate" in err


def test_unknown_axiom_exits_two(capsys):
    code, _, err = run(capsys, "check", fixture_path("f1"), "--axioms", "bogus")
    assert code == 2
    assert "bogus" in err


def test_non_commuting_binding_exits_two(capsys):
    code, _, err = run(
        capsys, "connective", fixture_path("r2"),
        "--expr", "a & b", "--bind", "a=px,b=pd",
    )
    assert code == 2
    assert "commute" in err


def test_strong_sep_on_unsuitable_model_exits_two(capsys):
    code, _, err = run(capsys, "order", fixture_path("r2"), "--strong-sep")
    assert code == 2
    assert "point measurement" in err


# exit code 3: budgets -------------------------------------------------------------


def test_budget_exit_code(capsys):
    code, _, err = run(
        capsys, "tautology", fixture_path("t2"),
        "--commuting", "p,q,top", "--depth", "6", "--slots", "3",
    )
    assert code == 3
    assert "budget" in err


# subcommands ----------------------------------------------------------------------


def test_connective_subcommand(capsys):
    code, out, _ = run(
        capsys, "connective", fixture_path("t2"),
        "--expr", "~(a & ~b)", "--bind", "a=p,b=q",
    )
    assert code == 0
    assert "result: p->q" in out


def test_connective_subcommand_on_rays(capsys):
    code, out, _ = run(
        capsys, "connective", fixture_path("r2"),
        "--expr", "a | b", "--bind", "a=px,b=py", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == "top"
    assert not payload["fp_complete"]
    assert "(1,1)" in payload["fp"]


def test_connective_malformed_binding(capsys):
    code, _, err = run(
        capsys, "connective", fixture_path("t2"),
        "--expr", "a", "--bind", "a:p",
    )
    assert code == 2
    assert "slot=name" in err


def test_tautology_subcommand(capsys):
    code, out, _ = run(
        capsys, "tautology", fixture_path("r2"),
        "--commuting", "bot,px,py,top", "--depth", "3", "--slots", "3",
    )
    assert code == 0
    assert "tautology_theorem: PASS" in out
    assert "scheme_weakening: PASS" in out


def test_lemmas_subcommand(capsys):
    code, out, _ = run(capsys, "lemmas", fixture_path("t2"))
    assert code == 0
    assert "fp_determines" in out
    assert out.count("\n") >= 13


def test_order_subcommand(capsys):
    code, out, _ = run(capsys, "order", fixture_path("r3"))
    assert code == 0
    assert "ortho_orthomodular: PASS" in out


def test_order_strong_sep_subcommand(capsys):
    code, out, _ = run(capsys, "order", fixture_path("r2_full"), "--strong-sep")
    assert code == 0
    assert "pointsep_decomposition: PASS (sampled)" in out


def test_height_flag_is_honored(capsys):
    code_small, out_small, _ = run(
        capsys, "check", fixture_path("r2"), "--axioms", "interference",
        "--height", "1", "--format", "json",
    )
    code_big, out_big, _ = run(
        capsys, "check", fixture_path("r2"), "--axioms", "interference",
        "--height", "3", "--format", "json",
    )
    assert code_small == code_big == 0
    small = json.loads(out_small)["checks"][0]["checked"]
    big = json.loads(out_big)["checks"][0]["checked"]
    assert small < big


# determinism and round trips -------------------------------------------------------


def test_json_reports_are_byte_stable(capsys):
    _, first, _ = run(capsys, "check", fixture_path("r2"), "--format", "json")
    _, second, _ = run(capsys, "check", fixture_path("r2"), "--format", "json")
    assert first == second


@pytest.mark.parametrize(
    "name", ["f1", "t2", "t2_maximal", "r2", "r2_full", "r3", "r3_full"]
)
def test_fixture_files_round_trip(name):
    raw = json.loads(Path(fixture_path(name)).read_text())
    alg = load_model(raw)
    assert dump_model(load_model(dump_model(alg))) == dump_model(alg)
