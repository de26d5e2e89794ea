import hashlib
import json

import pytest

from plancompiler.cli import main

from conftest import REPO_ROOT
from helpers import ROUNDTRIP_CHAIN, ROUNDTRIP_PARAMS, chain_edges

TEMPLATES_ROOT = str(REPO_ROOT / "node_templates")


def registry_args():
    return ["--templates-root", TEMPLATES_ROOT]


def write_plan(tmp_path, nodes=ROUNDTRIP_CHAIN, parameters=ROUNDTRIP_PARAMS, edges=None):
    plan = {
        "nodes": list(nodes),
        "edges": edges if edges is not None else chain_edges(list(nodes)),
        "parameters": parameters,
        "flags": [],
        "glue_code": "",
    }
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(plan), encoding="utf-8")
    return path


def test_validate_valid_plan(tmp_path, capsys):
    plan = write_plan(tmp_path)
    code = main(["validate", str(plan), *registry_args()])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["valid"]
    assert report["topo_order"] == list(ROUNDTRIP_CHAIN)


def test_validate_invalid_plan_exit_1(tmp_path, capsys):
    plan = write_plan(
        tmp_path,
        nodes=["CSVParser", "SQLiteConnector", "SQLiteReader"],
        parameters={
            "CSVParser": {"file_path": "a"},
            "SQLiteConnector": {"db_path": "d", "table_name": "t"},
            "SQLiteReader": {"db_path": "d"},
        },
    )
    code = main(["validate", str(plan), *registry_args()])
    assert code == 1
    report = json.loads(capsys.readouterr().out)
    assert report["failed_check"] == 3


def test_validate_fallback_flag(tmp_path, capsys):
    plan = write_plan(tmp_path, edges=[])
    assert main(["validate", str(plan), *registry_args()]) == 1
    assert main(["validate", str(plan), "--fallback", *registry_args()]) == 0
    capsys.readouterr()


def test_compile_writes_artifact_and_prints_digest(tmp_path, capsys):
    plan = write_plan(tmp_path)
    output = tmp_path / "app.py"
    code = main(["compile", str(plan), "-o", str(output), *registry_args()])
    assert code == 0
    printed_digest = capsys.readouterr().out.split()[0]
    assert printed_digest == hashlib.sha256(output.read_bytes()).hexdigest()
    assert output.read_text().startswith("# Generated by PlanCompiler\n")


def test_compile_invalid_plan_fails(tmp_path, capsys):
    plan = write_plan(tmp_path, nodes=["NotANode"], parameters={}, edges=[])
    code = main(["compile", str(plan), "-o", str(tmp_path / "app.py"), *registry_args()])
    assert code == 1
    assert "compile failed" in capsys.readouterr().err


def test_hash_matches_file_digest(tmp_path, capsys):
    artifact = tmp_path / "app.py"
    artifact.write_bytes(b"print('x')\n")
    assert main(["hash", str(artifact)]) == 0
    printed = capsys.readouterr().out.strip()
    assert printed == hashlib.sha256(b"print('x')\n").hexdigest()


def test_run_subcommand_mini_subset(tmp_path, fixtures_dir, capsys):
    tasks = {
        "set_id": "cli",
        "tasks": [
            {
                "task_id": "cli_1",
                "description": "roundtrip",
                "fixtures": ["people.csv"],
                "criteria": [{"kind": "file_row_count", "path": "out.csv", "count": 10}],
                "authoring": {
                    "nodes": ["CSVParser", "CSVExporter"],
                    "parameters": {
                        "CSVParser": {"file_path": "people.csv"},
                        "CSVExporter": {"output_path": "out.csv"},
                    },
                },
            }
        ],
    }
    task_path = tmp_path / "tasks.json"
    task_path.write_text(json.dumps(tasks), encoding="utf-8")
    output = tmp_path / "results.json"
    code = main(
        [
            "run",
            "--tasks", str(task_path),
            "--output", str(output),
            "--planner", "stub",
            "--n-runs", "2",
            "--run-dir", str(tmp_path / "runs"),
            "--fixtures-root", str(fixtures_dir),
            *registry_args(),
        ]
    )
    assert code == 0
    assert "1/1 tasks first-pass" in capsys.readouterr().out
    results = json.loads(output.read_text())
    assert results["aggregate"]["success_rate"] == 1.0
    assert results["config"]["n_runs"] == 2
