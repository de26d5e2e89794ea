"""
Running the offline benchmark mini-set
======================================

Generates the seeded fixtures, then drives the full pipeline — plan,
normalize, validate, compile, execute, criteria — three times per task over
the shipped 10-task mini-set using the deterministic stub planner, and
prints the per-task outcomes and set aggregate.

Run from the repository root:  python demos/03_benchmark_miniset.py
"""

import json
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from plancompiler import HarnessConfig, default_registry_path, load_registry, run_set
from plancompiler.planner import PlannerConfig

from node_templates.generate_fixtures import generate_fixtures

registry = load_registry(default_registry_path(), templates_root="node_templates")

workdir = Path(tempfile.mkdtemp(prefix="plancc_demo_"))
fixtures = workdir / "fixtures"
generate_fixtures(fixtures)
print(f"fixtures generated under {fixtures}\n")

config = HarnessConfig(
    registry=registry,
    run_root=workdir / "runs",
    fixtures_root=fixtures,
    n_runs=3,
    timeout=40.0,
    planner=PlannerConfig(backend="stub"),
)
report = run_set("benchmark/tasks/mini_set.json", workdir / "results.json", config)

results = json.loads((workdir / "results.json").read_text())
for task in results["tasks"]:
    status = "PASS" if task["first_pass_success"] else "FAIL"
    print(f"{status}  {task['task_id']}  ({task['pass_count']}/3 runs)")

rate = report.success_rate if report.success_rate is not None else 0.0
print(f"\nfirst-pass success: {report.success_count}/{report.task_count} ({rate:.0%})")
print(f"mean latency per task: {report.avg_latency_seconds:.2f}s")
print(f"results JSON: {workdir / 'results.json'}")
