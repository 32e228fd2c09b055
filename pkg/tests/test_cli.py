import json
import subprocess
import sys
from pathlib import Path

import pytest

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run_cli(*argv, env=None):
    cmd = [sys.executable, "-m", "duoidal_kit.cli", *argv]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_center_z2():
    out = run_cli("center", "--monoid", str(CORPUS / "z2.json"))
    assert out.returncode == 0
    assert out.stdout.strip() == "Z(M) = {0,1}"


def test_center_t2():
    out = run_cli("center", "--monoid", str(CORPUS / "t2.json"))
    assert out.returncode == 0
    assert out.stdout.strip() == "Z(M) = {id}"


def test_check_duoidal_builtin_passes():
    out = run_cli("check-duoidal", "--builtin", "bool_lattice")
    assert out.returncode == 0
    assert "ALL PASS" in out.stdout


def test_check_duoidal_file_round_trip(tmp_path):
    out = run_cli("check-duoidal", "--instance", str(CORPUS / "bool_lattice.json"))
    assert out.returncode == 0


def test_check_duoid_v():
    out = run_cli("check-duoid", "--builtin", "additive_z2")
    assert out.returncode == 0


def test_check_duoid_from_file():
    out = run_cli(
        "check-duoid",
        "--instance",
        str(CORPUS / "bool_lattice.json"),
        "--duoid",
        str(CORPUS / "duoid_v_bool_lattice.json"),
    )
    assert out.returncode == 0


def test_check_operad_monoid_and_corrupted_table():
    out = run_cli("check-operad", "--monoid", str(CORPUS / "z2.json"), "--bound", "3")
    assert out.returncode == 0
    ok = run_cli("check-operad", "--builtin", "additive_z2", "--operad", str(CORPUS / "fass_additive_z2.json"))
    assert ok.returncode == 0
    bad = run_cli(
        "check-operad", "--builtin", "additive_z2", "--operad", str(CORPUS / "fass_corrupt_additive_z2.json")
    )
    assert bad.returncode == 1
    assert "FAIL" in bad.stdout and "witness" in bad.stdout


def test_cosimplicial_verify():
    out = run_cli("cosimplicial-verify", "--monoid", str(CORPUS / "z2.json"), "--levels", "3")
    assert out.returncode == 0
    assert "generic" in out.stdout


def test_delta_center_exit_codes():
    out = run_cli("delta-center", "--monoid", str(CORPUS / "z3.json"), "--delta", "const")
    assert out.returncode == 0
    assert "stabilized: True" in out.stdout
    out = run_cli("delta-center", "--monoid", str(CORPUS / "t2.json"), "--delta", "const", "--levels", "1")
    # at N = 1 the restriction to the unconstrained level is not bijective
    assert out.returncode == 1


def test_tamarkin_subcommand():
    out = run_cli(
        "tamarkin", "--functor", str(CORPUS / "id_bz2_functor.json"), "--delta", "const", "--globe", "id_*,id_*"
    )
    assert out.returncode == 0
    assert "families: 2" in out.stdout
    pair = run_cli(
        "tamarkin", "--functor", str(CORPUS / "pair_bz2_functor.json"), "--delta", "const", "--globe", "u,w"
    )
    assert pair.returncode == 0
    assert "families: 0" in pair.stdout


def test_trees_subcommands():
    out = run_cli("trees", "enumerate", "--leaves", "2")
    assert out.returncode == 0 and "(1->1; t=[1])" in out.stdout
    out = run_cli("trees", "prune", "--tree", "2>3:1,3")
    assert out.returncode == 0 and "pruned: (2->2; t=[1, 2])" in out.stdout
    out = run_cli(
        "trees", "fibers", "--source", "2>2:1,2", "--target", "2>3:1,3", "--sigma1", "1,3", "--sigma2", "1,2"
    )
    assert out.returncode == 0 and "height-1 leaf 2" in out.stdout


def test_two_operad_subcommands():
    out = run_cli("two-operad", "check", "--builtin", "bool_lattice", "--x", "1", "--leaves", "2")
    assert out.returncode == 0
    out = run_cli("two-operad", "end", "--builtin", "bool_lattice", "--x", "1", "--leaves", "2")
    assert out.returncode == 0 and "component of size 1" in out.stdout


def test_btree_subcommands():
    out = run_cli("btree", "contract", "--term", "w(w(l,l),l)")
    assert out.returncode == 0 and out.stdout.strip() == "w(l,l,l)"
    out = run_cli("btree", "enumerate", "--tree-kind", "btree", "--leaves", "2", "--max-vertices", "1")
    assert out.stdout.split() == ["w(l,l)", "b(l,l)"]


def test_input_errors_exit_2(tmp_path):
    missing = run_cli("center", "--monoid", str(tmp_path / "nope.json"))
    assert missing.returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out = run_cli("center", "--monoid", str(bad))
    assert out.returncode == 2 and "error:" in out.stderr
    wrong_kind = tmp_path / "wrong.json"
    wrong_kind.write_text(json.dumps({"kind": "mystery", "schema_version": 1}))
    out = run_cli("center", "--monoid", str(wrong_kind))
    assert out.returncode == 2


def test_byte_identical_reruns():
    for argv in (
        ("check-duoidal", "--builtin", "bool_lattice"),
        ("center", "--monoid", str(CORPUS / "s3.json")),
        ("trees", "enumerate", "--leaves", "3"),
        ("delta-center", "--monoid", str(CORPUS / "z3.json"), "--delta", "lax"),
    ):
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_json_format_and_out_file(tmp_path):
    target = tmp_path / "report.json"
    out = run_cli("--format", "json", "--out", str(target), "check-duoidal", "--builtin", "bool_cartesian")
    assert out.returncode == 0
    doc = json.loads(target.read_text())
    assert doc["all_passed"] is True and doc["items"]


def test_selftest_seeded():
    env = {"DUOIDAL_KIT_SEED": "3", "PATH": "/usr/bin:/bin"}
    out = run_cli("selftest", env=env)
    assert out.returncode == 0
    again = run_cli("selftest", env=env)
    assert out.stdout == again.stdout
