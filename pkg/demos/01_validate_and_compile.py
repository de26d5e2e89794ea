"""
Validating and compiling a pipeline plan
========================================

Loads the shipped 25-node registry, walks a plan through the seven-check
validator, shows how a type error at the SQLite persistence boundary is
rejected, and compiles the valid plan into a deterministic script.

Run from the repository root:  python demos/01_validate_and_compile.py
"""

from plancompiler import (
    PlanDocument,
    compile_plan,
    default_registry_path,
    load_registry,
    validate_plan,
)

# The registry is data: a versioned JSON file naming each node's types,
# required parameters, template file, and callable name.
registry = load_registry(default_registry_path(), templates_root="node_templates")
print(f"registry v{registry.version} with {len(registry.nodes)} nodes")
print(f"example entry: {registry.nodes['CSVParser']}\n")

# A plan is nodes + edges + per-node parameters. This one reads a CSV,
# filters it, stores it in SQLite, queries it back, and exports the result.
plan = PlanDocument(
    nodes=["CSVParser", "DataFilter", "SQLiteConnector", "QueryEngine", "CSVExporter"],
    edges=[
        ["CSVParser", "DataFilter"],
        ["DataFilter", "SQLiteConnector"],
        ["SQLiteConnector", "QueryEngine"],
        ["QueryEngine", "CSVExporter"],
    ],
    parameters={
        "CSVParser": {"file_path": "employees.csv"},
        "DataFilter": {"condition": "salary > 40000"},
        "SQLiteConnector": {"db_path": "out.db", "table_name": "employees"},
        "QueryEngine": {"query": "SELECT * FROM employees"},
        "CSVExporter": {"output_path": "output.csv"},
    },
)

report = validate_plan(plan, registry)
print(f"valid plan -> valid={report.valid}, order={report.topo_order}\n")

# Wiring the database handle into a node that wants a DataFrame is caught
# statically, before any code is emitted.
broken = PlanDocument(
    nodes=["CSVParser", "SQLiteConnector", "SQLiteReader"],
    edges=[["CSVParser", "SQLiteConnector"], ["SQLiteConnector", "SQLiteReader"]],
    parameters={
        "CSVParser": {"file_path": "employees.csv"},
        "SQLiteConnector": {"db_path": "out.db", "table_name": "employees"},
        "SQLiteReader": {"db_path": "out.db"},
    },
)
bad_report = validate_plan(broken, registry)
print(f"broken plan -> failed at CHECK {bad_report.failed_check}:")
for error in bad_report.errors:
    print(f"  {error.message}")
print()

# Compilation is deterministic: same plan, same templates, same bytes.
first = compile_plan(plan, registry)
second = compile_plan(plan, registry)
print(f"artifact digest: {first.digest}")
print(f"recompiled digest identical: {first.digest == second.digest}")
print("\nfirst lines of the artifact:")
for line in first.source.splitlines()[:6]:
    print(f"  {line}")
