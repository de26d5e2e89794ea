"""Command-line interface.

Subcommands: ``run`` (benchmark a task set), ``validate`` (check one plan
file), ``compile`` (emit an artifact from one plan file), and ``hash``
(SHA-256 of an artifact file).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .compiler import CompileError, compile_plan
from .harness import HarnessConfig, run_set
from .plan import apply_edge_chain_fallback, normalize_plan, parse_plan
from .planner import PlannerConfig
from .registry import Registry, default_registry_path, load_registry
from .validation import validate_plan

import hashlib


def _add_registry_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--registry",
        default=None,
        help="registry JSON file (default: the packaged 25-node registry)",
    )
    parser.add_argument(
        "--templates-root",
        default=None,
        help="directory templates resolve against (default: ./node_templates, "
        "falling back to the registry file's directory)",
    )


def _load_registry(args: argparse.Namespace) -> Registry:
    registry_path = Path(args.registry) if args.registry else default_registry_path()
    templates_root = args.templates_root
    if templates_root is None and args.registry is None:
        candidate = Path("node_templates")
        if candidate.is_dir():
            templates_root = candidate
    return load_registry(registry_path, templates_root=templates_root)


def _load_plan(path: str, registry: Registry, fallback: bool):
    raw = parse_plan(Path(path).read_text(encoding="utf-8"))
    plan = normalize_plan(raw, registry)
    if fallback:
        plan = apply_edge_chain_fallback(plan)
    return plan


def _cmd_run(args: argparse.Namespace) -> int:
    registry = _load_registry(args)
    config = HarnessConfig(
        registry=registry,
        run_root=Path(args.run_dir),
        fixtures_root=Path(args.fixtures_root),
        n_runs=args.n_runs,
        timeout=args.timeout,
        interpreter=args.interpreter,
        planner=PlannerConfig(backend=args.planner, model_name=args.model),
        replay_dir=Path(args.replay_dir) if args.replay_dir else None,
    )
    report = run_set(args.tasks, args.output, config)
    rate = "n/a" if report.success_rate is None else f"{report.success_rate:.2%}"
    print(
        f"{report.success_count}/{report.task_count} tasks first-pass "
        f"(rate {rate}); results written to {args.output}"
    )
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    registry = _load_registry(args)
    plan = _load_plan(args.plan, registry, args.fallback)
    report = validate_plan(plan, registry)
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.valid else 1


def _cmd_compile(args: argparse.Namespace) -> int:
    registry = _load_registry(args)
    plan = _load_plan(args.plan, registry, args.fallback)
    try:
        artifact = compile_plan(plan, registry)
    except CompileError as exc:
        print(f"compile failed: {exc}", file=sys.stderr)
        return 1
    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_bytes(artifact.source_bytes)
    print(f"{artifact.digest}  {output}")
    return 0


def _cmd_hash(args: argparse.Namespace) -> int:
    digest = hashlib.sha256(Path(args.artifact).read_bytes()).hexdigest()
    print(digest)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plancc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a benchmark task set")
    run.add_argument("--tasks", required=True, help="task-set JSON file")
    run.add_argument("--output", required=True, help="results JSON output path")
    run.add_argument("--planner", choices=("stub", "replay", "live"), default="stub")
    run.add_argument("--n-runs", type=int, default=3)
    run.add_argument("--timeout", type=float, default=40.0)
    run.add_argument("--interpreter", default=None, help="interpreter command (default: this Python)")
    run.add_argument("--run-dir", default="runs", help="root directory for per-run workspaces")
    run.add_argument(
        "--fixtures-root",
        default="benchmark/fixtures/generated",
        help="directory task fixture paths resolve against",
    )
    run.add_argument("--replay-dir", default=None, help="recorded-plan directory for --planner replay")
    run.add_argument("--model", default="gpt-4o-mini", help="model name for --planner live")
    _add_registry_options(run)
    run.set_defaults(func=_cmd_run)

    validate = sub.add_parser("validate", help="validate a plan JSON file")
    validate.add_argument("plan")
    validate.add_argument("--fallback", action="store_true", help="apply the edge-chain fallback first")
    _add_registry_options(validate)
    validate.set_defaults(func=_cmd_validate)

    compile_cmd = sub.add_parser("compile", help="compile a plan JSON file to a script")
    compile_cmd.add_argument("plan")
    compile_cmd.add_argument("-o", "--output", default="app.py")
    compile_cmd.add_argument("--fallback", action="store_true", help="apply the edge-chain fallback first")
    _add_registry_options(compile_cmd)
    compile_cmd.set_defaults(func=_cmd_compile)

    hash_cmd = sub.add_parser("hash", help="print the SHA-256 digest of an artifact file")
    hash_cmd.add_argument("artifact")
    hash_cmd.set_defaults(func=_cmd_hash)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
