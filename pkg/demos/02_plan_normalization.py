"""
Normalizing messy planner output
================================

Planner models return plans in several non-standard shapes: node objects
with type/params fields, snake_case names, edges as from/to objects, arrow
strings, or index pairs. All of them canonicalize to the same plan, and a
missing or backward edge list falls back to the ordered node chain.

Run from the repository root:  python demos/02_plan_normalization.py
"""

import json

from plancompiler import (
    apply_edge_chain_fallback,
    default_registry_path,
    load_registry,
    normalize_plan,
    parse_plan,
    to_canonical_json,
)

registry = load_registry(default_registry_path(), templates_root="node_templates")

messy_forms = {
    "node objects": {
        "nodes": [
            {"type": "csv_parser", "params": {"file_path": "people.csv"}},
            {"type": "csv_exporter", "params": {"output_path": "out.csv"}},
        ],
        "edges": [["CSVParser", "CSVExporter"]],
    },
    "arrow edges": {
        "nodes": ["CSVParser", "CSVExporter"],
        "edges": ["CSVParser -> CSVExporter"],
        "parameters": {
            "CSVParser": {"file_path": "people.csv"},
            "CSVExporter": {"output_path": "out.csv"},
        },
    },
    "index edges": {
        "nodes": ["csv_parser", "csv_exporter"],
        "edges": [[0, 1]],
        "parameters": {
            "csv_parser": {"file_path": "people.csv"},
            "csv_exporter": {"output_path": "out.csv"},
        },
    },
}

for label, document in messy_forms.items():
    plan = normalize_plan(parse_plan(json.dumps(document)), registry)
    print(f"{label:12s} -> {to_canonical_json(plan)}")

# The same text wrapped in a fenced code block parses identically.
fenced = "```json\n" + json.dumps(messy_forms["arrow edges"]) + "\n```"
print("\nfenced output parses too:", parse_plan(fenced).nodes)

# An empty edge list is replaced by the ordered chain, so a five-node plan
# always reaches the validator with exactly four forward edges.
incomplete = {
    "nodes": ["CSVParser", "DataFilter", "DataSorter", "Logger", "CSVExporter"],
    "edges": [],
}
plan = apply_edge_chain_fallback(normalize_plan(parse_plan(json.dumps(incomplete)), registry))
print("\nchain fallback produced:")
for source, target in plan.edges:
    print(f"  {source} -> {target}")
