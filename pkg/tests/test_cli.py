"""End-to-end CLI behaviour: subcommands, exit codes, deterministic outputs."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from weblibs.cli import EXIT_VULNERABLE, main

from conftest import (
    catalogue_lines,
    msgov_event_records,
    script_bytes,
    write_event_log_file,
)


@pytest.fixture
def runner():
    return CliRunner()


def vulnerable_site_records():
    from conftest import digest_of

    jq = script_bytes("jquery", "1.6.2")
    return [
        {"seq": 1, "kind": "document_committed", "frame_id": "f0", "node_id": "d0",
         "url": "http://old-site.com/"},
        {"seq": 2, "kind": "script_created", "frame_id": "f0", "node_id": "jq",
         "url": "http://old-site.com/js/jquery-1.6.2.min.js",
         "source_digest": digest_of(jq), "source_bytes": len(jq)},
    ]


def test_catalogue_validate_ok(runner, catalogue_path):
    result = runner.invoke(main, ["catalogue", "validate", "--catalogue", str(catalogue_path)])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["libraries"] == 7
    assert payload["vulnerabilities"] == 8


def test_catalogue_validate_names_offending_record(runner, tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text(
        "\n".join(catalogue_lines()[:1] + ['{"kind":"vuln","library":"jquery","id":"x"}']),
        encoding="utf-8",
    )
    result = runner.invoke(main, ["catalogue", "validate", "--catalogue", str(bad)])
    assert result.exit_code != 0
    assert "line 2" in result.output


def test_catalogue_validate_missing_file(runner, tmp_path):
    result = runner.invoke(
        main, ["catalogue", "validate", "--catalogue", str(tmp_path / "nope.jsonl")]
    )
    assert result.exit_code != 0
    assert "not found" in result.output


def test_tree_build_metrics_and_dot(runner, tmp_path):
    log = write_event_log_file(tmp_path, "msgov.jsonl", msgov_event_records())
    result = runner.invoke(main, ["tree", "build", "--events", str(log)])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["site_domain"] == "www.ms.gov"
    assert payload["nodes"] == 18  # 1 document + 1 root jq + 4 injectors + 12 jq
    result = runner.invoke(main, ["tree", "build", "--events", str(log), "--dot"])
    assert "digraph causality" in result.output
    out = tmp_path / "treeout"
    result = runner.invoke(
        main, ["tree", "build", "--events", str(log), "--dot", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert (out / "www.ms.gov.dot").read_text().startswith("digraph causality")


def test_detect_subcommand(runner, tmp_path, catalogue_path):
    good = tmp_path / "jquery-1.11.1.min.js"
    good.write_bytes(script_bytes("jquery", "1.11.1"))
    small = tmp_path / "small.js"
    small.write_bytes(b"x" * 995)
    unknown = tmp_path / "app.js"
    unknown.write_bytes(b"var app = 1;" + b"/* pad */" * 200)
    result = runner.invoke(
        main,
        ["detect", str(good), str(small), str(unknown), "--catalogue", str(catalogue_path)],
    )
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0].endswith("jquery 1.11.1")
    assert "995" in lines[1] and "floor" in lines[1]
    assert lines[2].endswith("no detection")


def test_analyze_pipeline_and_determinism(runner, tmp_path, catalogue_path):
    log1 = write_event_log_file(tmp_path, "msgov.jsonl", msgov_event_records())
    log2 = write_event_log_file(tmp_path, "vuln.jsonl", vulnerable_site_records())
    filters = tmp_path / "tracker.txt"
    filters.write_text("||google-analytics.com^\n", encoding="utf-8")

    def run(out_name):
        out = tmp_path / out_name
        result = runner.invoke(
            main,
            [
                "analyze",
                "--catalogue", str(catalogue_path),
                "--events", str(log1),
                "--events", str(log2),
                "--filters", f"tracker={filters}",
                "--out", str(out),
                "--dot",
            ],
        )
        assert result.exit_code == 0, result.output
        return out

    out_a = run("out_a")
    out_b = run("out_b")
    for name in ("sites.jsonl", "corpus.json", "tables.txt"):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()
    assert (out_a / "dot" / "www.ms.gov.dot").exists()
    assert (out_a / "run.json").exists()

    sites = [json.loads(line) for line in (out_a / "sites.jsonl").read_text().splitlines()]
    assert [s["site_domain"] for s in sites] == ["old-site.com", "www.ms.gov"]
    msgov = sites[1]
    assert msgov["any_same_version_duplicate"] is True
    assert msgov["any_multi_version"] is True
    old = sites[0]
    assert old["vulnerable_distinct_versions"] == 1
    assert old["remediable_by_patch"] is True


def test_analyze_fail_on_vuln_distinct_exit(runner, tmp_path, catalogue_path):
    log = write_event_log_file(tmp_path, "vuln.jsonl", vulnerable_site_records())
    result = runner.invoke(
        main,
        ["analyze", "--catalogue", str(catalogue_path), "--events", str(log),
         "--out", str(tmp_path / "out"), "--fail-on-vuln"],
    )
    assert result.exit_code == EXIT_VULNERABLE


def test_analyze_clean_site_fail_on_vuln_ok(runner, tmp_path, catalogue_path):
    log = write_event_log_file(tmp_path, "msgov.jsonl", msgov_event_records())
    result = runner.invoke(
        main,
        ["analyze", "--catalogue", str(catalogue_path), "--events", str(log),
         "--out", str(tmp_path / "out"), "--fail-on-vuln"],
    )
    assert result.exit_code == 0, result.output


def test_analyze_jobs_flag_same_output(runner, tmp_path, catalogue_path):
    log1 = write_event_log_file(tmp_path, "a.jsonl", msgov_event_records())
    log2 = write_event_log_file(tmp_path, "b.jsonl", vulnerable_site_records())
    outs = []
    for jobs, name in (("1", "seq"), ("4", "par")):
        out = tmp_path / name
        result = runner.invoke(
            main,
            ["analyze", "--catalogue", str(catalogue_path), "--events", str(log1),
             "--events", str(log2), "--out", str(out), "--jobs", jobs],
        )
        assert result.exit_code == 0, result.output
        outs.append(out)
    assert (outs[0] / "sites.jsonl").read_bytes() == (outs[1] / "sites.jsonl").read_bytes()
    assert (outs[0] / "corpus.json").read_bytes() == (outs[1] / "corpus.json").read_bytes()


def test_report_render(runner, tmp_path, catalogue_path):
    log = write_event_log_file(tmp_path, "vuln.jsonl", vulnerable_site_records())
    out = tmp_path / "out"
    runner.invoke(
        main,
        ["analyze", "--catalogue", str(catalogue_path), "--events", str(log),
         "--out", str(out)],
    )
    result = runner.invoke(main, ["report", "render", "--out", str(out)])
    assert result.exit_code == 0
    assert "Vulnerable fraction" in result.output
    assert "jquery" in result.output


def test_report_render_without_analyze_errors(runner, tmp_path):
    result = runner.invoke(main, ["report", "render", "--out", str(tmp_path)])
    assert result.exit_code != 0
    assert "analyze" in result.output


def test_events_validate(runner, tmp_path):
    log = write_event_log_file(tmp_path, "msgov.jsonl", msgov_event_records())
    result = runner.invoke(main, ["events", "validate", str(log)])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["events"] == 18
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"seq": 1, "kind": "nope", "frame_id": "f0"}\n', encoding="utf-8")
    result = runner.invoke(main, ["events", "validate", str(bad)])
    assert result.exit_code != 0


def test_env_var_overrides_flags(runner, catalogue_path):
    result = runner.invoke(
        main,
        ["catalogue", "validate"],
        env={"WEBLIBS_CATALOGUE_VALIDATE_CATALOGUE_PATH": str(catalogue_path)},
    )
    assert result.exit_code == 0, result.output
