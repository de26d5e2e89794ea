"""Deterministic artifact assembly.

A compiled artifact is the profile's header lines, then each node's template
file appended verbatim in topological order behind a section marker, then an
auto-generated execution block.  Compilation revalidates the plan before
emitting anything; it does not trust that callers have pre-validated.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .plan import PlanDocument
from .registry import Registry
from .validation import ValidationReport, validate_plan


class CompileError(Exception):
    """Compilation rejected the plan or could not read a template.

    ``report`` carries the ValidationReport when the rejection came from
    revalidation.
    """

    def __init__(self, message: str, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


def python_literal(value: Any) -> str:
    """Render a parameter value as a Python source literal.

    Matches the runtime's own repr for every plan-expressible value type;
    map and list elements keep planner key order.
    """
    if value is None or isinstance(value, (bool, int, float, str)):
        return repr(value)
    if isinstance(value, list):
        return "[" + ", ".join(python_literal(item) for item in value) + "]"
    if isinstance(value, dict):
        items = ", ".join(
            f"{python_literal(key)}: {python_literal(item)}" for key, item in value.items()
        )
        return "{" + items + "}"
    raise CompileError(f"parameter value {value!r} has unsupported type {type(value).__name__}")


@dataclass(frozen=True)
class RuntimeProfile:
    """Surface syntax of the emitted script.

    The default profile emits Python and reproduces the documented artifact
    layout byte-for-byte given the shipped templates.
    """

    name: str
    header_lines: tuple[str, ...]
    node_marker: str = "# --- Node: {name} ---"
    section_separator: str = "\n"
    execution_marker: str = "# --- Execution (auto-generated) ---"
    entry_guard: str = "if __name__ == '__main__':"
    indent: str = "    "
    output_prefix: str = "out_"
    print_statement: str = "print({value})"
    literal_renderer: Callable[[Any], str] = field(default=python_literal, compare=False)


PYTHON_PROFILE = RuntimeProfile(
    name="python",
    header_lines=("# Generated by PlanCompiler", "# DO NOT EDIT MANUALLY"),
)


@dataclass(frozen=True)
class CompiledArtifact:
    source_bytes: bytes
    digest: str
    topo_order: tuple[str, ...]
    plan: PlanDocument

    @property
    def source(self) -> str:
        return self.source_bytes.decode("utf-8")


def render_literal(value: Any, profile: RuntimeProfile) -> str:
    return profile.literal_renderer(value)


def emit_execution_block(
    topo_order: list[str],
    edges: list[list[str]],
    parameters: dict[str, dict[str, Any]],
    registry: Registry,
    profile: RuntimeProfile,
) -> str:
    """Emit one assignment per node in topological order.

    Entry nodes receive keyword parameters only; every other node receives
    its single predecessor's output variable first, then keyword parameters
    in plan key order.  Ends by printing the last node's output.
    """
    predecessor = {target: source for source, target in edges}
    lines = [profile.execution_marker, profile.entry_guard]
    for name in topo_order:
        function = registry.nodes[name].function_name
        arguments = []
        if name in predecessor:
            upstream = registry.nodes[predecessor[name]].function_name
            arguments.append(f"{profile.output_prefix}{upstream}")
        for key, value in parameters.get(name, {}).items():
            arguments.append(f"{key}={render_literal(value, profile)}")
        lines.append(
            f"{profile.indent}{profile.output_prefix}{function} = "
            f"{function}({', '.join(arguments)})"
        )
    last_function = registry.nodes[topo_order[-1]].function_name
    final_value = f"{profile.output_prefix}{last_function}"
    lines.append(profile.indent + profile.print_statement.format(value=final_value))
    return "\n".join(lines) + "\n"


def compile_plan(
    plan: PlanDocument,
    registry: Registry,
    profile: RuntimeProfile = PYTHON_PROFILE,
) -> CompiledArtifact:
    """Validate, order, and assemble the plan into a single script.

    Raises CompileError if revalidation fails, a template file cannot be
    read, or the plan has more than one terminal node (the execution block
    prints exactly one final output).
    """
    if not plan.nodes:
        raise CompileError("plan has no nodes; nothing to compile")
    report = validate_plan(plan, registry)
    if not report.valid:
        first = report.errors[0].message if report.errors else "invalid plan"
        raise CompileError(f"plan failed validation: {first}", report=report)
    topo_order = report.topo_order
    assert topo_order is not None

    sources = {source for source, _ in plan.edges}
    terminals = [name for name in plan.nodes if name not in sources]
    if len(terminals) > 1:
        raise CompileError(
            f"plan has {len(terminals)} terminal nodes ({', '.join(terminals)}); "
            "single-stream pipelines must end in exactly one"
        )

    parts = [line + "\n" for line in profile.header_lines]
    for name in topo_order:
        template = registry.template_file(name)
        try:
            body = template.read_text(encoding="utf-8")
        except OSError as exc:
            raise CompileError(f"cannot read template for node '{name}': {exc}") from exc
        parts.append(profile.node_marker.format(name=name) + "\n")
        parts.append(body)
        parts.append(profile.section_separator)
    parts.append(
        emit_execution_block(topo_order, plan.edges, plan.parameters, registry, profile)
    )

    source_bytes = "".join(parts).encode("utf-8")
    digest = hashlib.sha256(source_bytes).hexdigest()
    return CompiledArtifact(
        source_bytes=source_bytes,
        digest=digest,
        topo_order=tuple(topo_order),
        plan=plan,
    )


def write_artifact(artifact: CompiledArtifact, run_dir: str | Path, filename: str = "app.py") -> Path:
    """Write the artifact into the run directory and return its path."""
    run_dir = Path(run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    path = run_dir / filename
    path.write_bytes(artifact.source_bytes)
    return path
