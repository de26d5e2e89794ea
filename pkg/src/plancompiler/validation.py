"""The seven-check static validator.

Checks run in strict order.  CHECK 1 (node existence) aborts immediately on
failure because every later check assumes the node specs exist.  Checks 2-7
each run to completion, collecting all of that check's errors, and
validation stops at the first check that produced any.

``topological_sort`` is a public function here because it is the one
interface shared with the compiler.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Union

from .plan import PlanDocument
from .registry import Registry, type_compatible

CHECK_NAMES = (
    "UNKNOWN_NODE",
    "EDGE_UNDECLARED_NODE",
    "TYPE_MISMATCH",
    "CYCLE_DETECTED",
    "ORPHAN_NODE",
    "INPUT_ARITY",
    "MISSING_PARAM",
)


class GraphCycleError(Exception):
    """Raised by topological_sort when not every node can be visited."""

    def __init__(self, remaining: list[str]):
        self.remaining = remaining
        super().__init__(f"cycle involving nodes {remaining}")


@dataclass(frozen=True)
class ValidationError:
    check: str
    message: str
    subject: Union[str, tuple[str, str]]

    def to_json(self) -> dict:
        subject = list(self.subject) if isinstance(self.subject, tuple) else self.subject
        return {"check": self.check, "message": self.message, "subject": subject}


@dataclass
class ValidationReport:
    valid: bool
    errors: list[ValidationError] = field(default_factory=list)
    failed_check: int | None = None
    topo_order: list[str] | None = None

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "errors": [error.to_json() for error in self.errors],
            "failed_check": self.failed_check,
            "topo_order": self.topo_order,
        }


def topological_sort(nodes: list[str], edges: list[list[str]]) -> list[str]:
    """Kahn's algorithm over the given node list and edge pairs.

    Every edge endpoint must appear in ``nodes``.  Among ready nodes, the one
    earliest in the input node list is emitted first, so the result is
    deterministic.  Raises GraphCycleError if not all nodes are visited.
    """
    index = {name: i for i, name in enumerate(nodes)}
    in_degree = {name: 0 for name in nodes}
    successors: dict[str, list[str]] = {name: [] for name in nodes}
    for source, target in edges:
        successors[source].append(target)
        in_degree[target] += 1

    ready = [index[name] for name in nodes if in_degree[name] == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        name = nodes[heapq.heappop(ready)]
        order.append(name)
        for successor in successors[name]:
            in_degree[successor] -= 1
            if in_degree[successor] == 0:
                heapq.heappush(ready, index[successor])

    if len(order) != len(nodes):
        raise GraphCycleError([name for name in nodes if name not in set(order)])
    return order


def validate_plan(plan: PlanDocument, registry: Registry) -> ValidationReport:
    """Run the seven checks in order and return a report.

    Never raises; all failures are report contents.  ``topo_order`` is
    present exactly when the plan is valid.
    """
    # CHECK 1: every plan node exists in the registry.  Early abort.
    errors = [
        ValidationError(
            check="UNKNOWN_NODE",
            message=f"UNKNOWN_NODE: [{name}] is not a registered node",
            subject=name,
        )
        for name in plan.nodes
        if name not in registry.nodes
    ]
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=1)

    # CHECK 2: every edge endpoint is a declared plan node.
    declared = set(plan.nodes)
    for source, target in plan.edges:
        for endpoint in (source, target):
            if endpoint not in declared:
                errors.append(
                    ValidationError(
                        check="EDGE_UNDECLARED_NODE",
                        message=(
                            f"EDGE_UNDECLARED_NODE: [{source} -> {target}] references "
                            f"undeclared node '{endpoint}'"
                        ),
                        subject=(source, target),
                    )
                )
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=2)

    # CHECK 3: output/input type compatibility across every edge.
    for source, target in plan.edges:
        out_type = registry.nodes[source].output_type
        in_type = registry.nodes[target].input_type
        if not type_compatible(out_type, in_type):
            errors.append(
                ValidationError(
                    check="TYPE_MISMATCH",
                    message=(
                        f"TYPE_MISMATCH: [{source} -> {target}] "
                        f"{out_type.wire_name} != {in_type.wire_name}"
                    ),
                    subject=(source, target),
                )
            )
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=3)

    # CHECK 4: acyclicity via Kahn's algorithm.
    try:
        topo_order = topological_sort(plan.nodes, plan.edges)
    except GraphCycleError as exc:
        errors.append(
            ValidationError(
                check="CYCLE_DETECTED",
                message=f"CYCLE_DETECTED: cycle involving [{', '.join(exc.remaining)}]",
                subject=exc.remaining[0],
            )
        )
        return ValidationReport(valid=False, errors=errors, failed_check=4)

    # CHECK 5: in a multi-node plan, every node appears in at least one edge.
    if len(plan.nodes) > 1:
        connected = {name for edge in plan.edges for name in edge}
        for name in plan.nodes:
            if name not in connected:
                errors.append(
                    ValidationError(
                        check="ORPHAN_NODE",
                        message=f"ORPHAN_NODE: [{name}] participates in no edge",
                        subject=name,
                    )
                )
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=5)

    # CHECK 6: every non-entry node has exactly one inbound edge.
    inbound: dict[str, int] = {name: 0 for name in plan.nodes}
    for _, target in plan.edges:
        inbound[target] += 1
    for name in plan.nodes:
        if inbound[name] > 1:
            errors.append(
                ValidationError(
                    check="INPUT_ARITY",
                    message=(
                        f"INPUT_ARITY: [{name}] has {inbound[name]} inbound edges; "
                        "exactly one is allowed"
                    ),
                    subject=name,
                )
            )
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=6)

    # CHECK 7: every required parameter is present (presence, not validity).
    for name in plan.nodes:
        given = plan.parameters.get(name, {})
        for param in registry.nodes[name].required_params:
            if param not in given:
                errors.append(
                    ValidationError(
                        check="MISSING_PARAM",
                        message=(
                            f"MISSING_PARAM: [{name}] missing required parameter '{param}'"
                        ),
                        subject=name,
                    )
                )
    if errors:
        return ValidationReport(valid=False, errors=errors, failed_check=7)

    return ValidationReport(valid=True, errors=[], failed_check=None, topo_order=topo_order)
