"""Shared builders for plans, random graphs, and random raw-plan forms."""

from __future__ import annotations

import itertools
import random
import re

from plancompiler import PlanDocument, Registry, type_compatible

ROUNDTRIP_CHAIN = [
    "CSVParser",
    "DataFilter",
    "SQLiteConnector",
    "QueryEngine",
    "CSVExporter",
]

ROUNDTRIP_PARAMS = {
    "CSVParser": {"file_path": "employees.csv"},
    "DataFilter": {"condition": "salary > 40000"},
    "SQLiteConnector": {"db_path": "out.db", "table_name": "employees"},
    "QueryEngine": {"query": "SELECT * FROM employees"},
    "CSVExporter": {"output_path": "output.csv"},
}


def chain_edges(nodes: list[str]) -> list[list[str]]:
    return [[nodes[i], nodes[i + 1]] for i in range(len(nodes) - 1)]


def make_plan(nodes, edges=None, parameters=None, **kwargs) -> PlanDocument:
    return PlanDocument(
        nodes=list(nodes),
        edges=[list(edge) for edge in edges] if edges is not None else chain_edges(list(nodes)),
        parameters=parameters or {},
        **kwargs,
    )


def roundtrip_plan() -> PlanDocument:
    return make_plan(ROUNDTRIP_CHAIN, parameters={k: dict(v) for k, v in ROUNDTRIP_PARAMS.items()})


def dummy_params(registry: Registry, nodes: list[str]) -> dict:
    return {
        name: {param: "x" for param in registry.nodes[name].required_params}
        for name in nodes
        if registry.nodes[name].required_params
    }


def random_valid_chain(registry: Registry, rng: random.Random, max_len: int = 8) -> PlanDocument:
    """Random type-compatible chain over the registry with all required
    parameters filled; guaranteed to pass all seven checks."""
    names = sorted(registry.nodes)
    current = rng.choice(names)
    nodes = [current]
    target_len = rng.randint(1, max_len)
    while len(nodes) < target_len:
        candidates = [
            name
            for name in names
            if name not in nodes
            and type_compatible(
                registry.nodes[current].output_type, registry.nodes[name].input_type
            )
        ]
        if not candidates:
            break
        current = rng.choice(candidates)
        nodes.append(current)
    return make_plan(nodes, parameters=dummy_params(registry, nodes))


def random_dag(rng: random.Random, max_nodes: int = 6) -> tuple[list[str], list[list[str]]]:
    """Random DAG presented in a shuffled input order, so tie-break rules
    get exercised.  Acyclic by construction (edges follow a hidden order)."""
    n = rng.randint(1, max_nodes)
    hidden = [f"n{i}" for i in range(n)]
    rng.shuffle(hidden)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                edges.append([hidden[i], hidden[j]])
    nodes = list(hidden)
    rng.shuffle(nodes)
    rng.shuffle(edges)
    return nodes, edges


def brute_force_topo_orders(nodes: list[str], edges: list[list[str]]) -> list[list[str]]:
    orders = []
    for perm in itertools.permutations(nodes):
        position = {name: i for i, name in enumerate(perm)}
        if all(position[a] < position[b] for a, b in edges):
            orders.append(list(perm))
    return orders


def snakeify(name: str) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower()


def random_raw_plan_text(registry: Registry, rng: random.Random) -> str:
    """Random well-formed plan JSON exercising the tolerated non-standard
    shapes: node dicts, snake_case names, edge dicts, arrows, index pairs."""
    import json

    names = rng.sample(sorted(registry.nodes), rng.randint(1, 6))
    nodes = []
    parameters = {}
    for name in names:
        style = rng.randrange(4)
        if style == 0:
            nodes.append(name)
        elif style == 1:
            nodes.append(snakeify(name))
        elif style == 2:
            nodes.append(name.lower())
        else:
            nodes.append({"type": snakeify(name), "params": {"inline_opt": rng.randint(0, 9)}})
        if rng.random() < 0.6:
            parameters[rng.choice([name, snakeify(name)])] = {
                param: "v" for param in registry.nodes[name].required_params
            }

    edge_pool = [[names[i], names[i + 1]] for i in range(len(names) - 1)]
    edges = []
    for source, target in edge_pool:
        if rng.random() < 0.2:
            continue  # drop some edges so the fallback predicate varies
        style = rng.randrange(4)
        if style == 0:
            edges.append([source, target])
        elif style == 1:
            edges.append({"from": source, "to": target})
        elif style == 2:
            edges.append(f"{source} -> {target}")
        else:
            edges.append([names.index(source), names.index(target)])
    if rng.random() < 0.15 and len(names) > 1:
        edges.reverse()

    return json.dumps(
        {
            "nodes": nodes,
            "edges": edges,
            "parameters": parameters,
            "flags": ["advisory"] if rng.random() < 0.2 else [],
            "glue_code": "",
        }
    )
