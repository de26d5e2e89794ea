"""Plan parsing and normalization.

Planner backends return raw JSON text.  ``parse_plan`` turns that text into
a RawPlan without touching its shape; ``normalize_plan`` canonicalizes the
known non-standard forms (node dicts, integer references, snake_case names,
edge dicts, arrow strings) into a PlanDocument; and
``apply_edge_chain_fallback`` replaces unusable edge lists with the ordered
node chain.  Stripping a single fenced code block is the only repair applied
to raw text — anything else malformed is a plan failure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any

from .registry import Registry


class PlanParseError(Exception):
    """Raw planner output is not a well-formed plan JSON document."""


class PlanNormalizationError(Exception):
    """A parsed plan cannot be canonicalized (e.g. duplicate node names)."""


_FENCE_RE = re.compile(r"\A\s*```[\w-]*[ \t]*\r?\n(.*?)\r?\n?```\s*\Z", re.DOTALL)


@dataclass
class RawPlan:
    """Planner output, preserved verbatim; no canonicalization here."""

    nodes: list[Any] = field(default_factory=list)
    edges: list[Any] = field(default_factory=list)
    parameters: dict[str, Any] = field(default_factory=dict)
    flags: list[Any] = field(default_factory=list)
    glue_code: Any = None


@dataclass
class PlanDocument:
    """Canonical plan: unique node names, [source, target] edge pairs,
    per-node parameter maps in planner key order.

    ``glue_code`` is carried for fidelity but never executed.  ``warnings``
    and ``had_malformed_edges`` are normalization bookkeeping, excluded from
    equality and from the canonical serialization.
    """

    nodes: list[str]
    edges: list[list[str]]
    parameters: dict[str, dict[str, Any]]
    flags: list[str] = field(default_factory=list)
    glue_code: str = ""
    warnings: list[str] = field(default_factory=list, compare=False, repr=False)
    had_malformed_edges: bool = field(default=False, compare=False, repr=False)


def parse_plan(raw_text: str) -> RawPlan:
    """Parse planner output into a RawPlan.

    Tolerates exactly one fenced code block wrapper around the JSON document.
    Raises PlanParseError for malformed JSON or a non-object top level.
    """
    text = raw_text
    fenced = _FENCE_RE.match(text)
    if fenced:
        text = fenced.group(1)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PlanParseError(f"plan is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise PlanParseError("top-level plan value must be a JSON object")

    nodes = data.get("nodes", [])
    edges = data.get("edges", [])
    parameters = data.get("parameters", {})
    flags = data.get("flags", [])
    if nodes is None:
        nodes = []
    if edges is None:
        edges = []
    if parameters is None:
        parameters = {}
    if flags is None:
        flags = []
    if not isinstance(nodes, list):
        raise PlanParseError("plan field 'nodes' must be a list")
    if not isinstance(edges, list):
        raise PlanParseError("plan field 'edges' must be a list")
    if not isinstance(parameters, dict):
        raise PlanParseError("plan field 'parameters' must be an object")
    if not isinstance(flags, list):
        raise PlanParseError("plan field 'flags' must be a list")
    return RawPlan(
        nodes=nodes,
        edges=edges,
        parameters=parameters,
        flags=flags,
        glue_code=data.get("glue_code"),
    )


def _fuzzy_key(name: str) -> str:
    return name.replace("_", "").casefold()


def _resolve_name(name: str, lookup: dict[str, str]) -> str:
    """Resolve against the registry by case-insensitive, underscore-stripped
    comparison; unresolvable names pass through verbatim for CHECK 1."""
    return lookup.get(_fuzzy_key(name), name)


def normalize_plan(raw: RawPlan, registry: Registry) -> PlanDocument:
    """Canonicalize a RawPlan against the registry.

    Applies, in order: node objects with type/params fields, integer node
    references (zero-based into the resolved node list), registry name
    resolution, edge objects with from/to fields, and arrow-notation edge
    strings.  Raises PlanNormalizationError for duplicate node names and
    out-of-range integer references.
    """
    lookup = {_fuzzy_key(name): name for name in registry.nodes}
    warnings: list[str] = []

    resolved: list[Any] = []
    inline_params: dict[int, dict[str, Any]] = {}
    for position, entry in enumerate(raw.nodes):
        if isinstance(entry, bool):
            raise PlanNormalizationError(f"node entry {entry!r} is not a node reference")
        if isinstance(entry, int):
            resolved.append(entry)
        elif isinstance(entry, str):
            resolved.append(_resolve_name(entry, lookup))
        elif isinstance(entry, dict):
            type_name = entry.get("type")
            if not isinstance(type_name, str):
                raise PlanNormalizationError(
                    f"node object at position {position} has no 'type' field"
                )
            resolved.append(_resolve_name(type_name, lookup))
            params = entry.get("params")
            if isinstance(params, dict):
                inline_params[position] = params
        else:
            raise PlanNormalizationError(
                f"node entry {entry!r} is not a name, index, or node object"
            )

    nodes: list[str] = []
    for position, entry in enumerate(resolved):
        if isinstance(entry, int):
            if not 0 <= entry < len(resolved) or not isinstance(resolved[entry], str):
                raise PlanNormalizationError(
                    f"integer node reference {entry} at position {position} is out of range"
                )
            nodes.append(resolved[entry])
        else:
            nodes.append(entry)

    seen = set()
    for name in nodes:
        if name in seen:
            raise PlanNormalizationError(f"duplicate node name '{name}' in plan")
        seen.add(name)

    node_lookup = {_fuzzy_key(name): name for name in nodes}

    parameters: dict[str, dict[str, Any]] = {name: {} for name in nodes}
    for position, params in inline_params.items():
        parameters[nodes[position]].update(params)
    for key, params in raw.parameters.items():
        name = node_lookup.get(_fuzzy_key(str(key)))
        if name is None:
            warnings.append(f"parameters for '{key}' dropped: no such node in plan")
            continue
        if not isinstance(params, dict):
            raise PlanNormalizationError(f"parameters for '{key}' must be an object")
        for param, value in params.items():
            if param in parameters[name] and parameters[name][param] != value:
                warnings.append(
                    f"parameter '{param}' of '{name}' given both inline and top-level; "
                    "top-level value kept"
                )
            parameters[name][param] = value
    parameters = {name: params for name, params in parameters.items() if params}

    edges: list[list[str]] = []
    had_malformed = False
    for entry in raw.edges:
        pair = _coerce_edge(entry, nodes, node_lookup)
        if pair is None:
            had_malformed = True
            warnings.append(f"edge entry {entry!r} dropped: not a recognizable edge")
        else:
            edges.append(pair)

    return PlanDocument(
        nodes=nodes,
        edges=edges,
        parameters=parameters,
        flags=[str(flag) for flag in raw.flags],
        glue_code=raw.glue_code if isinstance(raw.glue_code, str) else "",
        warnings=warnings,
        had_malformed_edges=had_malformed,
    )


def _coerce_edge(entry: Any, nodes: list[str], node_lookup: dict[str, str]) -> list[str] | None:
    if isinstance(entry, str):
        parts = entry.split("->")
        if len(parts) != 2:
            return None
        endpoints: list[Any] = [parts[0].strip(), parts[1].strip()]
    elif isinstance(entry, dict):
        if "from" not in entry or "to" not in entry:
            return None
        endpoints = [entry["from"], entry["to"]]
    elif isinstance(entry, (list, tuple)) and len(entry) == 2:
        endpoints = list(entry)
    else:
        return None

    pair: list[str] = []
    for endpoint in endpoints:
        if isinstance(endpoint, bool):
            return None
        if isinstance(endpoint, int):
            if not 0 <= endpoint < len(nodes):
                return None
            pair.append(nodes[endpoint])
        elif isinstance(endpoint, str):
            name = endpoint.strip()
            pair.append(node_lookup.get(_fuzzy_key(name), name))
        else:
            return None
    return pair


def apply_edge_chain_fallback(plan: PlanDocument) -> PlanDocument:
    """Replace an unusable edge list with the ordered node chain.

    The edge list is replaced when it was malformed, has fewer than n-1
    edges for n>1 nodes, references undeclared nodes, or is non-forward
    with respect to node order.  Total for normalized plans; idempotent.
    """
    nodes = plan.nodes
    index = {name: i for i, name in enumerate(nodes)}

    needs_fallback = plan.had_malformed_edges
    if not needs_fallback and len(nodes) > 1 and len(plan.edges) < len(nodes) - 1:
        needs_fallback = True
    if not needs_fallback:
        for source, target in plan.edges:
            if source not in index or target not in index or index[source] >= index[target]:
                needs_fallback = True
                break

    if not needs_fallback:
        return plan

    chain = [[nodes[i], nodes[i + 1]] for i in range(len(nodes) - 1)]
    return PlanDocument(
        nodes=list(nodes),
        edges=chain,
        parameters=plan.parameters,
        flags=plan.flags,
        glue_code=plan.glue_code,
        warnings=plan.warnings + ["edge list replaced with ordered node chain"],
        had_malformed_edges=False,
    )


def to_canonical_json(plan: PlanDocument) -> str:
    """Deterministic serialization; parse + normalize is identity on it.

    Parameter keys keep plan node order; per-node parameter keys keep
    planner key order.
    """
    parameters = {name: plan.parameters[name] for name in plan.nodes if name in plan.parameters}
    for name, params in plan.parameters.items():
        if name not in parameters:
            parameters[name] = params
    document = {
        "nodes": plan.nodes,
        "edges": plan.edges,
        "parameters": parameters,
        "flags": plan.flags,
        "glue_code": plan.glue_code,
    }
    return json.dumps(document, separators=(",", ":"), ensure_ascii=True)
