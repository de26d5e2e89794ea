"""Benchmark driver.

For every task, N_RUNS times: stage fixtures into a fresh run directory,
plan, parse, normalize (with the edge-chain fallback), validate, compile,
execute, and evaluate criteria.  A run passes only if all five stage
booleans are true; a task is a first-pass success only if every run passes.
All failures land in stage booleans — nothing is retried or repaired.
"""

from __future__ import annotations

import hashlib
import json
import shutil
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import planner as planner_mod
from .compiler import CompileError, compile_plan, write_artifact
from .criteria import Criterion, CriterionSpecError, evaluate_criteria
from .executor import ExecutorError, execute
from .plan import (
    PlanNormalizationError,
    PlanParseError,
    apply_edge_chain_fallback,
    normalize_plan,
    parse_plan,
)
from .planner import PlannerConfig, PlannerError, PlannerUsage
from .registry import Registry
from .validation import validate_plan

STAGES = ("plan", "validation", "compile", "run", "criteria")


class TaskSetError(Exception):
    """A task-set file is malformed or references missing fixtures."""


@dataclass(frozen=True)
class TaskSpec:
    task_id: str
    set_id: str
    description: str
    fixtures: tuple[Path, ...]
    criteria: tuple[Criterion, ...]
    authoring: dict[str, Any] | None = None


@dataclass
class HarnessConfig:
    registry: Registry
    run_root: Path
    fixtures_root: Path
    n_runs: int = 3
    timeout: float = 40.0
    interpreter: str | list[str] | None = None
    planner: PlannerConfig = field(default_factory=PlannerConfig)
    replay_dir: Path | None = None


@dataclass
class RunRecord:
    plan_success: bool = False
    validation_success: bool = False
    compile_success: bool = False
    run_success: bool = False
    criteria_passed: bool = False
    duration_seconds: float = 0.0
    usage: PlannerUsage = field(default_factory=PlannerUsage)
    failure_stage: str | None = None
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.plan_success
            and self.validation_success
            and self.compile_success
            and self.run_success
            and self.criteria_passed
        )

    def to_json(self) -> dict:
        return {
            "plan_success": self.plan_success,
            "validation_success": self.validation_success,
            "compile_success": self.compile_success,
            "run_success": self.run_success,
            "criteria_passed": self.criteria_passed,
            "duration_seconds": self.duration_seconds,
            "usage": self.usage.to_json(),
            "failure_stage": self.failure_stage,
            "detail": self.detail,
        }


@dataclass
class TaskRecord:
    task_id: str
    runs: list[RunRecord]

    @property
    def pass_count(self) -> int:
        return sum(1 for run in self.runs if run.passed)

    @property
    def first_pass_success(self) -> bool:
        return bool(self.runs) and self.pass_count == len(self.runs)

    @property
    def avg_duration_seconds(self) -> float:
        return statistics.fmean(run.duration_seconds for run in self.runs) if self.runs else 0.0

    @property
    def planner_input_tokens(self) -> int:
        return sum(run.usage.input_tokens for run in self.runs)

    @property
    def planner_output_tokens(self) -> int:
        return sum(run.usage.output_tokens for run in self.runs)

    @property
    def planner_cost_usd(self) -> float:
        return sum(run.usage.cost_usd for run in self.runs)

    def to_json(self) -> dict:
        return {
            "task_id": self.task_id,
            "first_pass_success": self.first_pass_success,
            "pass_count": self.pass_count,
            "avg_duration_seconds": self.avg_duration_seconds,
            "planner_input_tokens": self.planner_input_tokens,
            "planner_output_tokens": self.planner_output_tokens,
            "planner_cost_usd": self.planner_cost_usd,
            "runs": [run.to_json() for run in self.runs],
        }


@dataclass
class SetReport:
    task_count: int
    success_count: int
    success_rate: float | None
    avg_latency_seconds: float | None
    total_cost_usd: float
    mean_cost_usd: float | None
    mean_input_tokens: float | None
    mean_output_tokens: float | None

    def to_json(self) -> dict:
        return {
            "task_count": self.task_count,
            "success_count": self.success_count,
            "success_rate": self.success_rate,
            "avg_latency_seconds": self.avg_latency_seconds,
            "total_cost_usd": self.total_cost_usd,
            "mean_cost_usd": self.mean_cost_usd,
            "mean_input_tokens": self.mean_input_tokens,
            "mean_output_tokens": self.mean_output_tokens,
        }


def load_task_set(path: str | Path, fixtures_root: str | Path) -> tuple[str, list[TaskSpec]]:
    """Load a task-set JSON file, checking task-id uniqueness and that every
    fixture path resolves under the fixtures root."""
    path = Path(path)
    fixtures_root = Path(fixtures_root)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise TaskSetError(f"cannot load task set {path}: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("tasks"), list):
        raise TaskSetError(f"{path}: task set must be an object with a 'tasks' list")

    set_id = str(data.get("set_id", path.stem))
    tasks: list[TaskSpec] = []
    seen: set[str] = set()
    for entry in data["tasks"]:
        task_id = str(entry["task_id"])
        if task_id in seen:
            raise TaskSetError(f"duplicate task_id '{task_id}' in {path}")
        seen.add(task_id)
        fixtures = []
        for name in entry.get("fixtures", []):
            fixture = fixtures_root / name
            if not fixture.is_file():
                raise TaskSetError(f"task '{task_id}' fixture {fixture} does not exist")
            fixtures.append(fixture)
        try:
            criteria = tuple(Criterion.from_json(c) for c in entry.get("criteria", []))
        except CriterionSpecError as exc:
            raise TaskSetError(f"task '{task_id}': {exc}") from exc
        tasks.append(
            TaskSpec(
                task_id=task_id,
                set_id=set_id,
                description=str(entry.get("description", "")),
                fixtures=tuple(fixtures),
                criteria=criteria,
                authoring=entry.get("authoring"),
            )
        )
    return set_id, tasks


class PlannerBackend:
    """Uniform plan(task, run_index) interface over the three backends."""

    def plan(self, task: TaskSpec, run_index: int) -> tuple[str, PlannerUsage]:
        raise NotImplementedError


class StubBackend(PlannerBackend):
    def __init__(self, registry: Registry):
        self.registry = registry

    def plan(self, task: TaskSpec, run_index: int) -> tuple[str, PlannerUsage]:
        return planner_mod.plan_stub(task.authoring, self.registry), PlannerUsage()


class ReplayBackend(PlannerBackend):
    def __init__(self, replay_dir: Path):
        self.replay_dir = replay_dir

    def plan(self, task: TaskSpec, run_index: int) -> tuple[str, PlannerUsage]:
        return planner_mod.plan_replay(task.task_id, self.replay_dir, run_index)


class LiveBackend(PlannerBackend):
    def __init__(self, registry: Registry, config: PlannerConfig):
        self.registry = registry
        self.config = config

    def plan(self, task: TaskSpec, run_index: int) -> tuple[str, PlannerUsage]:
        prompt = planner_mod.build_prompt(task.description, self.registry)
        return planner_mod.plan_live(prompt, self.config)


def make_backend(config: HarnessConfig) -> PlannerBackend:
    backend = config.planner.backend
    if backend == "stub":
        return StubBackend(config.registry)
    if backend == "replay":
        if config.replay_dir is None:
            raise TaskSetError("replay backend needs a replay directory")
        return ReplayBackend(config.replay_dir)
    if backend == "live":
        return LiveBackend(config.registry, config.planner)
    raise TaskSetError(f"unknown planner backend '{backend}'")


def _stage_fixtures(task: TaskSpec, run_dir: Path) -> None:
    # Fixtures are copied, not symlinked, so runs cannot affect each other.
    for fixture in task.fixtures:
        shutil.copy(fixture, run_dir / fixture.name)


def _execute_run(
    task: TaskSpec, backend: PlannerBackend, run_index: int, config: HarnessConfig
) -> RunRecord:
    record = RunRecord()
    run_dir = config.run_root / task.set_id / task.task_id / f"run_{run_index}"
    if run_dir.exists():
        shutil.rmtree(run_dir)
    run_dir.mkdir(parents=True)
    _stage_fixtures(task, run_dir)

    start = time.monotonic()

    # Stage 1: plan (backend call, parse, normalize, edge-chain fallback).
    # Normalization errors count as plan failures: no document was produced.
    try:
        raw_text, usage = backend.plan(task, run_index)
        record.usage = usage
        planner_mod.record_plan(
            task.task_id, run_index, raw_text, usage, config.run_root / task.set_id
        )
        plan = apply_edge_chain_fallback(
            normalize_plan(parse_plan(raw_text), config.registry)
        )
    except (PlannerError, PlanParseError, PlanNormalizationError) as exc:
        record.failure_stage = "plan"
        record.detail = str(exc)
        record.duration_seconds = time.monotonic() - start
        return record
    record.plan_success = True

    # Stage 2: validate.  On failure no artifact is written.
    report = validate_plan(plan, config.registry)
    if not report.valid:
        record.failure_stage = "validation"
        record.detail = "; ".join(error.message for error in report.errors)
        record.duration_seconds = time.monotonic() - start
        return record
    record.validation_success = True

    # Stage 3: compile (revalidates internally).  On failure nothing runs.
    try:
        artifact = compile_plan(plan, config.registry)
    except CompileError as exc:
        record.failure_stage = "compile"
        record.detail = str(exc)
        record.duration_seconds = time.monotonic() - start
        return record
    record.compile_success = True

    # Stage 4: execute one subprocess.
    write_artifact(artifact, run_dir)
    try:
        result = execute(
            "app.py", run_dir, interpreter=config.interpreter, timeout=config.timeout
        )
    except ExecutorError as exc:
        record.failure_stage = "run"
        record.detail = str(exc)
        record.duration_seconds = time.monotonic() - start
        return record
    record.duration_seconds = time.monotonic() - start
    record.run_success = result.exit_code == 0 and not result.timed_out
    if not record.run_success:
        record.failure_stage = "run"
        record.detail = (result.stderr or "").strip()[-500:] or "nonzero exit"
        return record

    # Stage 5: criteria (excluded from the duration clock).
    criteria_report = evaluate_criteria(list(task.criteria), result, run_dir)
    record.criteria_passed = criteria_report.verdict
    if not record.criteria_passed:
        record.failure_stage = "criteria"
        failed = [o for o in criteria_report.outcomes if not o.passed]
        record.detail = "; ".join(o.reason or o.criterion.kind for o in failed)
    return record


def run_task(task: TaskSpec, backend: PlannerBackend, config: HarnessConfig) -> TaskRecord:
    """Run one task n_runs times with fresh run directories each time."""
    runs = [
        _execute_run(task, backend, run_index, config)
        for run_index in range(1, config.n_runs + 1)
    ]
    return TaskRecord(task_id=task.task_id, runs=runs)


def aggregate(records: list[TaskRecord]) -> SetReport:
    """Per-set aggregation: rate, mean latency, total and mean cost, mean tokens."""
    count = len(records)
    successes = sum(1 for record in records if record.first_pass_success)
    total_cost = sum(record.planner_cost_usd for record in records)
    if count == 0:
        return SetReport(
            task_count=0,
            success_count=0,
            success_rate=None,
            avg_latency_seconds=None,
            total_cost_usd=0.0,
            mean_cost_usd=None,
            mean_input_tokens=None,
            mean_output_tokens=None,
        )
    return SetReport(
        task_count=count,
        success_count=successes,
        success_rate=successes / count,
        avg_latency_seconds=statistics.fmean(r.avg_duration_seconds for r in records),
        total_cost_usd=total_cost,
        mean_cost_usd=total_cost / count,
        mean_input_tokens=statistics.fmean(r.planner_input_tokens for r in records),
        mean_output_tokens=statistics.fmean(r.planner_output_tokens for r in records),
    )


def run_set(
    taskset_path: str | Path, output_path: str | Path, config: HarnessConfig
) -> SetReport:
    """Run every task in a set sequentially and write the results JSON."""
    set_id, tasks = load_task_set(taskset_path, config.fixtures_root)
    backend = make_backend(config)
    records = [run_task(task, backend, config) for task in tasks]
    report = aggregate(records)

    results = {
        "set_id": set_id,
        "tasks": [record.to_json() for record in records],
        "aggregate": report.to_json(),
        "config": {
            "planner_backend": config.planner.backend,
            "model_name": config.planner.model_name,
            "temperature": config.planner.temperature,
            "n_runs": config.n_runs,
            "timeout": config.timeout,
        },
    }
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(json.dumps(results, indent=2), encoding="utf-8")
    return report


_TIMING_FIELDS = {"duration_seconds", "avg_duration_seconds", "avg_latency_seconds", "latency"}


def _strip_timing(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_timing(v) for k, v in value.items() if k not in _TIMING_FIELDS}
    if isinstance(value, list):
        return [_strip_timing(item) for item in value]
    return value


def results_digest(results: dict) -> str:
    """SHA-256 of the results JSON with timing fields excluded, so replayed
    runs can be compared byte-for-byte."""
    canonical = json.dumps(_strip_timing(results), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
