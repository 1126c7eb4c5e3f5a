"""Command-line interface: outputs, exit codes, seeds, and error paths."""

import json
import subprocess
import sys
from pathlib import Path

from latcut.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_construct_cubeface_emits_body_and_certificate(capsys):
    code, doc = run_json(capsys, "construct", "cubeface", "--n", "2", "--i", "3")
    assert code == 0
    assert len(doc["body"]["hrep"]) == 3
    assert doc["certificate"]["lattice_free"] is True
    assert doc["certificate"]["maximal"] is True
    assert all(w is not None for w in doc["certificate"]["facet_witnesses"])


def test_construct_tower_emits_witnesses(capsys):
    code, doc = run_json(capsys, "construct", "tower",
                         "--f", "1/2,1/3", "--alpha", "3/1")
    assert code == 0
    assert len(doc["body"]["hrep"]) == 3
    assert len(doc["witnesses"]) == 3
    assert doc["certificate"]["maximal"] is True


def test_check_exit_codes_follow_the_verdict(capsys, tmp_path):
    code, doc = run_json(capsys, "check", str(FIXTURES / "diamond.json"))
    assert code == 0 and doc["lattice_free"] is True
    code, doc = run_json(capsys, "check", str(FIXTURES / "box_2d.json"))
    assert code == 1 and doc["lattice_free"] is False
    assert doc["interior_witness"] is not None


def test_width_bound_flag_drives_exit_code(capsys):
    code, doc = run_json(capsys, "width", str(FIXTURES / "diamond.json"),
                         "--bound", "4")
    assert code == 0 and doc["width"] == "2/1" and doc["within_bound"] is True
    code, doc = run_json(capsys, "width", str(FIXTURES / "diamond.json"),
                         "--bound", "3/2")
    assert code == 1 and doc["within_bound"] is False


def test_cut_emits_exact_split_coefficients(capsys, tmp_path):
    cols = tmp_path / "cols.json"
    cols.write_text('[["0", "1"], ["1", "0"], ["-1", "0"]]')
    code, doc = run_json(capsys, "cut",
                         "--body", str(FIXTURES / "split_horizontal.json"),
                         "--f", "1/2,1/2", "--cols", str(cols))
    assert code == 0
    assert doc["coeffs"] == ["2/1", "0/1", "0/1"]
    assert doc["trivial"] is False


def test_rho_reports_infinite_with_ray_witness(capsys):
    code, doc = run_json(capsys, "rho",
                         "--b", str(FIXTURES / "triangle_t1.json"),
                         "--l", str(FIXTURES / "split_horizontal.json"),
                         "--f", "1/2,1/2")
    assert code == 0
    assert doc["value"] == "inf"
    assert doc["witness"]["ray"] in (["1/1", "0/1"], ["-1/1", "0/1"])


def test_fmetric_reports_exact_square_and_display_float(capsys):
    code, doc = run_json(capsys, "fmetric",
                         str(FIXTURES / "triangle_t1.json"),
                         str(FIXTURES / "split_horizontal.json"),
                         "--f", "1/2,1/2")
    assert code == 0
    assert doc["dist_sq"] == "1/1"
    assert doc["dist"] == 1.0


def test_closure_collects_one_cut_per_family_member(capsys, tmp_path):
    fam = tmp_path / "fam"
    fam.mkdir()
    for name in ("split_horizontal.json", "split_slanted.json"):
        (fam / name).write_text((FIXTURES / name).read_text())
    cols = tmp_path / "cols.json"
    cols.write_text('[["0", "1"], ["1", "0"], ["-1", "0"]]')
    code, doc = run_json(capsys, "closure", "--family", str(fam),
                         "--f", "1/2,1/2", "--cols", str(cols))
    assert code == 0
    assert len(doc["cuts"]) == 2
    assert doc["cuts"][0]["coeffs"] == ["2/1", "0/1", "0/1"]


def test_sandwich_brackets_the_family_strength(capsys, tmp_path):
    fam = tmp_path / "fam"
    fam.mkdir()
    (fam / "a.json").write_text((FIXTURES / "split_horizontal.json").read_text())
    (fam / "b.json").write_text((FIXTURES / "diamond.json").read_text())
    code, doc = run_json(capsys, "sandwich", "--family", str(fam),
                         "--l", str(FIXTURES / "diamond.json"),
                         "--f", "1/2,1/2")
    assert code == 0
    assert set(doc) == {"lower", "upper", "n_bound"}
    assert doc["upper"] == "1/1"  # the target body itself is in the family


def test_lift_certifies_its_output(capsys):
    code, doc = run_json(capsys, "lift",
                         "--l", str(FIXTURES / "triangle_t1.json"),
                         "--f", "1/2,1", "--gamma", "1/2",
                         "--d", str(FIXTURES / "segment.json"), "--t", "1")
    assert code == 0
    assert len(doc["body"]["hrep"]) <= 3
    assert doc["certificate"]["lattice_free"] is True


def test_approx_fixed_mode_respects_facet_cap(capsys):
    code, doc = run_json(capsys, "approx", "--mode", "fixed",
                         "--l", str(FIXTURES / "diamond.json"),
                         "--f", "1/2,1/3")
    assert code == 0
    assert doc["facets"] <= 3
    assert doc["certificate"]["lattice_free"] is True


def test_scenario_text_and_json_outputs(capsys):
    code, out, err = run(capsys, "scenario", "cubeface-census", "--param", "n=2")
    assert code == 0 and err == ""
    assert out.startswith("scenario cubeface-census: PASS")
    code, doc = run_json(capsys, "scenario", "cubeface-census",
                         "--param", "n=2", "--json")
    assert code == 0 and doc["passed"] is True


def test_seed_precedence_flag_env_default(capsys, monkeypatch):
    monkeypatch.setenv("LATCUT_SEED", "5")
    code, doc = run_json(capsys, "scenario", "truncated-cone-shrink",
                         "--param", "count=3", "--json")
    assert code == 0 and doc["params"]["seed"] == 5
    code, doc = run_json(capsys, "scenario", "truncated-cone-shrink",
                         "--param", "count=3", "--seed", "7", "--json")
    assert code == 0 and doc["params"]["seed"] == 7
    monkeypatch.delenv("LATCUT_SEED")
    code, doc = run_json(capsys, "scenario", "truncated-cone-shrink",
                         "--param", "count=3", "--json")
    assert code == 0 and doc["params"]["seed"] == 0


def test_env_seed_leaves_seedless_scenarios_alone(capsys, monkeypatch):
    monkeypatch.setenv("LATCUT_SEED", "9")
    code, doc = run_json(capsys, "scenario", "lifting-end-to-end", "--json")
    assert code == 0
    assert "seed" not in doc["params"]


def test_list_scenarios_names_all_nine(capsys):
    code, out, err = run(capsys, "list-scenarios")
    assert code == 0
    assert len(out.strip().splitlines()) == 9
    assert out.startswith("cubeface-census")


def test_usage_errors_exit_two(capsys, tmp_path):
    code, out, err = run(capsys, "scenario", "no-such-scenario")
    assert code == 2 and "unknown scenario" in err
    code, out, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "check", str(bad))
    assert code == 2 and "error:" in err
    code, out, err = run(capsys, "rho",
                         "--b", str(FIXTURES / "diamond.json"),
                         "--l", str(FIXTURES / "diamond.json"),
                         "--f", "1/0,1/2")
    assert code == 2 and "denominator" in err


def test_lenient_flag_admits_unreduced_rationals(capsys, tmp_path):
    body = tmp_path / "interval.json"
    body.write_text(json.dumps({
        "dim": 1,
        "vrep": {"vertices": [["0/1"], ["2/4"]], "rays": []},
    }))
    code, out, err = run(capsys, "check", str(body))
    assert code == 2 and "error:" in err
    code, doc = run_json(capsys, "check", "--lenient", str(body))
    assert code == 0 and doc["lattice_free"] is True


def test_console_script_is_installed():
    proc = subprocess.run(["latcut", "list-scenarios"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(proc.stdout.strip().splitlines()) == 9
