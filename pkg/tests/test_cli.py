from __future__ import annotations

import json

import pytest

from bomdiff.cli import run

from conftest import FIXTURES

GOLDEN_1 = str(FIXTURES / "golden_graph1.json")
GOLDEN_2 = str(FIXTURES / "golden_graph2.json")
SAAS = str(FIXTURES / "saas_bom.json")
PROTON_OLD = str(FIXTURES / "proton_bridge_v1.6.3.json")
PROTON_NEW = str(FIXTURES / "proton_bridge_v1.8.0.json")


def test_identity_compare_exits_zero(capsys):
    assert run([SAAS, SAAS]) == 0
    out = capsys.readouterr().out
    assert "only_a=0 only_b=0" in out


def test_diff_exits_one(capsys):
    assert run([GOLDEN_1, GOLDEN_2]) == 1
    out = capsys.readouterr().out
    assert "nodes: both=4 only_a=3 only_b=1" in out


def test_missing_input_exits_two(capsys):
    assert run(["/does/not/exist.json", SAAS]) == 2
    err = capsys.readouterr().err
    assert "ingest" in err


def test_malformed_input_names_ingest_stage(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run([str(bad), SAAS, "--format-a", "cyclonedx"]) == 2
    assert "ingest" in capsys.readouterr().err


def test_bad_seed_exits_two(capsys):
    assert run([GOLDEN_1, GOLDEN_2, "--seed", "nope=C"]) == 2
    err = capsys.readouterr().err
    assert "match" in err


def test_seed_flag_shape_validated(capsys):
    assert run([GOLDEN_1, GOLDEN_2, "--seed", "justone"]) == 2
    assert "usage" in capsys.readouterr().err


def test_seed_override_used(capsys):
    assert run([GOLDEN_1, GOLDEN_2, "--seed", "C=C"]) == 1
    assert "both=4" in capsys.readouterr().out


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run([GOLDEN_1, GOLDEN_2, "--metric", "nonsense"])
    assert excinfo.value.code == 2


def test_artifacts_written(tmp_path, capsys):
    gml = tmp_path / "out.gml"
    report = tmp_path / "out.json"
    html = tmp_path / "out.html"
    code = run([
        GOLDEN_1, GOLDEN_2, "--suggest", "--collapse",
        "--gml", str(gml), "--report", str(report), "--html", str(html),
    ])
    assert code == 1
    data = json.loads(report.read_text())
    assert data["counts"]["nodes"]["ONLY_A"] == 3
    assert data["supernodes"][0]["member_count"] == 2
    assert len(data["suggestions"]) == 1
    assert gml.read_text().startswith("graph [")
    html_text = html.read_text()
    assert "bomgraph-data" in html_text
    # --collapse opens the viewer on the collapsed variant but still embeds
    # the expanded one.
    assert '"initial_variant":"collapsed"' in html_text
    assert '"expanded":' in html_text
    assert not list(tmp_path.glob("*.gml.*")), "temp files must not survive"


def test_no_partial_output_on_failure(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "out.gml"
    assert run([GOLDEN_1, GOLDEN_2, "--gml", str(target)]) == 2
    assert "export" in capsys.readouterr().err
    assert not target.exists()


def test_repeat_runs_byte_identical(tmp_path, capsys):
    outputs = []
    for index in range(2):
        report = tmp_path / f"r{index}.json"
        gml = tmp_path / f"g{index}.gml"
        html = tmp_path / f"h{index}.html"
        run([PROTON_OLD, PROTON_NEW, "--attr", "hash:SHA-256", "--suggest",
             "--report", str(report), "--gml", str(gml), "--html", str(html)])
        outputs.append((report.read_bytes(), gml.read_bytes(), html.read_bytes()))
    assert outputs[0] == outputs[1]
    stdout = capsys.readouterr().out.splitlines()
    half = len(stdout) // 2
    assert [line.split("/")[0] for line in stdout[:half]] == [
        line.split("/")[0] for line in stdout[half:]
    ]


def test_format_auto_detection(capsys):
    # golden fixtures are node-link, saas is CycloneDX; both auto-detect.
    assert run([GOLDEN_1, GOLDEN_1]) == 0
    assert run([SAAS, SAAS]) == 0


def test_explicit_format_mismatch_fails(capsys):
    assert run([SAAS, SAAS, "--format-a", "nodelink"]) == 2
    assert "ingest" in capsys.readouterr().err


def test_fuzzy_metric_flags(capsys):
    code = run([
        GOLDEN_1, GOLDEN_2,
        "--metric", "jaro-winkler", "--accept-threshold", "0.97",
        "--suggest", "--suggest-threshold", "0.9",
    ])
    assert code == 1
    out = capsys.readouterr().out
    assert "suggestions: 1" in out


def test_attr_flag_repeatable(capsys):
    assert run([SAAS, SAAS, "--attr", "name", "--attr", "version"]) == 0


def test_normalize_flag(tmp_path, capsys):
    upper = tmp_path / "upper.json"
    upper.write_text(json.dumps({
        "label": "upper",
        "nodes": [{"id": "C", "attrs": {"name": "GATEWAY"}},
                  {"id": "A", "attrs": {"name": "AUTH"}}],
        "edges": [["C", "A"]],
    }))
    lower = tmp_path / "lower.json"
    lower.write_text(json.dumps({
        "label": "lower",
        "nodes": [{"id": "C", "attrs": {"name": "gateway"}},
                  {"id": "A", "attrs": {"name": "auth"}}],
        "edges": [["C", "A"]],
    }))
    assert run([str(upper), str(lower)]) == 2  # no seed without normalization
    assert run([str(upper), str(lower), "--normalize"]) == 0


def test_dangling_refs_warned(tmp_path, capsys):
    bom = {
        "bomFormat": "CycloneDX",
        "components": [{"bom-ref": "X", "name": "x"}],
        "dependencies": [{"ref": "X", "dependsOn": ["ghost"]}],
    }
    path = tmp_path / "dangling.json"
    path.write_text(json.dumps(bom))
    assert run([str(path), str(path)]) == 0
    err = capsys.readouterr().err
    assert "ghost" in err and "dangling" in err
