"""Typed node registry: the closed set of pipeline primitives.

The registry is data, not code. It lives in a versioned JSON file and is
loaded eagerly: every node's template file must exist on disk at load time,
so a bad registry fails here instead of at compile time.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


class RegistryError(Exception):
    """Raised when a registry file cannot be loaded or is inconsistent."""


class NodeType(str, enum.Enum):
    """The five value types that can flow along an edge.

    The enum value is the name used in registry files; ``wire_name`` is the
    fixed form used verbatim in validator error messages.
    """

    FILE_PATH = "FilePath"
    DATA_FRAME = "DataFrame"
    DB_HANDLE = "DBHandle"
    HTTP_RESPONSE = "HTTPResponse"
    ANY = "ANY"

    @property
    def wire_name(self) -> str:
        return f"NodeType.{self.name}"


def type_compatible(source_out: NodeType, target_in: NodeType) -> bool:
    """An edge is well-typed if the types match or either side is ANY."""
    return (
        source_out == target_in
        or source_out == NodeType.ANY
        or target_in == NodeType.ANY
    )


@dataclass(frozen=True)
class NodeSpec:
    """One registry entry.

    ``function_name`` is stored explicitly and used directly by the compiler;
    it is never derived from ``name`` by any string transformation.
    """

    name: str
    description: str
    input_type: NodeType
    output_type: NodeType
    template_path: str
    required_params: tuple[str, ...]
    function_name: str


@dataclass(frozen=True)
class Registry:
    """Immutable map of node name to NodeSpec, plus the template root.

    ``templates_root`` is the directory against which each node's relative
    ``template_path`` resolves.
    """

    nodes: dict[str, NodeSpec]
    version: str
    templates_root: Path

    def template_file(self, name: str) -> Path:
        return self.templates_root / self.nodes[name].template_path


def default_registry_path() -> Path:
    """Path of the registry JSON shipped with the package (25 nodes)."""
    return Path(str(resources.files("plancompiler") / "data" / "registry.json"))


def load_registry(path: str | Path, templates_root: str | Path | None = None) -> Registry:
    """Load and verify a registry file.

    Template paths resolve relative to ``templates_root``, which defaults to
    the registry file's own directory.  Raises RegistryError for parse
    errors, duplicate names, unknown type names, and missing template files.
    """
    path = Path(path)
    root = Path(templates_root) if templates_root is not None else path.parent
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise RegistryError(f"cannot read registry file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise RegistryError(f"registry file {path} is not valid JSON: {exc}") from exc

    if not isinstance(data, dict) or not isinstance(data.get("nodes"), list):
        raise RegistryError(f"registry file {path} must be an object with a 'nodes' list")

    nodes: dict[str, NodeSpec] = {}
    for entry in data["nodes"]:
        spec = _parse_node(entry)
        if spec.name in nodes:
            raise RegistryError(f"duplicate node name '{spec.name}' in registry")
        template = root / spec.template_path
        if not template.is_file():
            raise RegistryError(
                f"node '{spec.name}' references missing template file {template}"
            )
        nodes[spec.name] = spec

    return Registry(nodes=nodes, version=str(data.get("version", "")), templates_root=root)


def _parse_node(entry: object) -> NodeSpec:
    if not isinstance(entry, dict):
        raise RegistryError(f"registry node entry must be an object, got {type(entry).__name__}")
    try:
        name = entry["name"]
        input_raw = entry["input_type"]
        output_raw = entry["output_type"]
        template_path = entry["template_path"]
        function_name = entry["function_name"]
    except KeyError as exc:
        raise RegistryError(f"registry node entry missing field {exc}") from exc
    try:
        input_type = NodeType(input_raw)
        output_type = NodeType(output_raw)
    except ValueError as exc:
        raise RegistryError(f"node '{name}' uses unknown type name: {exc}") from exc
    return NodeSpec(
        name=str(name),
        description=str(entry.get("description", "")),
        input_type=input_type,
        output_type=output_type,
        template_path=str(template_path),
        required_params=tuple(entry.get("required_params", [])),
        function_name=str(function_name),
    )


def get_node(registry: Registry, name: str) -> NodeSpec | None:
    """Exact-name lookup; fuzzy resolution lives in plan normalization."""
    return registry.nodes.get(name)


def serialize_for_prompt(registry: Registry) -> str:
    """Deterministic text listing of the registry for planner prompts.

    Lists name, description, input/output wire names, and required parameter
    names per node.  Template contents are never included.
    """
    stanzas = []
    for spec in registry.nodes.values():
        params = ", ".join(spec.required_params) if spec.required_params else "(none)"
        stanzas.append(
            f"- {spec.name}: {spec.description}\n"
            f"  input: {spec.input_type.wire_name}  output: {spec.output_type.wire_name}\n"
            f"  required_params: {params}"
        )
    return "\n".join(stanzas)
