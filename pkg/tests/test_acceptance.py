"""Acceptance suite for the deterministic subsystem.

One test per acceptance criterion, each printing a pass line on success.
Everything here runs against the shipped registry data with inert text
templates and in-memory tables; the real template corpus is not needed.
"""

import random

import pytest

from plancompiler import (
    CompileError,
    Criterion,
    ExecutionResult,
    Pricing,
    apply_edge_chain_fallback,
    check_file_column_sorted,
    check_file_has_column,
    check_file_row_count,
    check_stdout_contains,
    compile_plan,
    normalize_plan,
    parse_plan,
    to_canonical_json,
    topological_sort,
    validate_plan,
)

from helpers import (
    roundtrip_plan,
    brute_force_topo_orders,
    make_plan,
    random_dag,
    random_raw_plan_text,
    random_valid_chain,
)


def passline(name):
    print(f"[ACCEPTANCE] {name}: PASS", flush=True)


def full_params(chain):
    known = {
        "CSVParser": {"file_path": "employees.csv"},
        "JSONParser": {"file_path": "products.json"},
        "DataFilter": {"condition": "salary > 40000"},
        "DataSorter": {"by": "salary", "ascending": True},
        "Aggregator": {"group_by": "dept", "agg_func": "count"},
        "SQLiteConnector": {"db_path": "out.db", "table_name": "t"},
        "SQLiteReader": {"db_path": "out.db"},
        "QueryEngine": {"query": "SELECT * FROM t"},
        "CSVExporter": {"output_path": "output.csv"},
    }
    return {name: dict(known[name]) for name in chain if name in known}


CONNECTOR_READER = (
    "TYPE_MISMATCH: [SQLiteConnector -> SQLiteReader] "
    "NodeType.DB_HANDLE != NodeType.FILE_PATH"
)
READER_SORTER = (
    "TYPE_MISMATCH: [SQLiteReader -> DataSorter] "
    "NodeType.DB_HANDLE != NodeType.DATA_FRAME"
)

# The nine type-confusion regressions: seven SQLiteConnector -> SQLiteReader
# placements (the last of which also wires SQLiteReader into DataSorter) and
# two plans wiring SQLiteConnector straight into DataFrame consumers.
REGRESSIONS = [
    (["CSVParser", "SQLiteConnector", "SQLiteReader"], [CONNECTOR_READER]),
    (["CSVParser", "DataFilter", "SQLiteConnector", "SQLiteReader"], [CONNECTOR_READER]),
    (["JSONParser", "SQLiteConnector", "SQLiteReader"], [CONNECTOR_READER]),
    (
        ["CSVParser", "SQLiteConnector", "SQLiteReader", "QueryEngine", "CSVExporter"],
        [CONNECTOR_READER],
    ),
    (
        ["CSVParser", "DataSorter", "SQLiteConnector", "SQLiteReader", "QueryEngine"],
        [CONNECTOR_READER],
    ),
    (["CSVParser", "Aggregator", "SQLiteConnector", "SQLiteReader"], [CONNECTOR_READER]),
    (
        ["CSVParser", "SQLiteConnector", "SQLiteReader", "DataSorter"],
        [CONNECTOR_READER, READER_SORTER],
    ),
    (
        ["CSVParser", "SQLiteConnector", "Aggregator"],
        ["TYPE_MISMATCH: [SQLiteConnector -> Aggregator] NodeType.DB_HANDLE != NodeType.DATA_FRAME"],
    ),
    (
        ["CSVParser", "SQLiteConnector", "CSVExporter"],
        ["TYPE_MISMATCH: [SQLiteConnector -> CSVExporter] NodeType.DB_HANDLE != NodeType.DATA_FRAME"],
    ),
]


def test_criterion_validator_regression_pack(inert_registry):
    for chain, expected_messages in REGRESSIONS:
        plan = make_plan(chain, parameters=full_params(chain))
        report = validate_plan(plan, inert_registry)
        assert not report.valid
        assert report.failed_check == 3
        assert [error.message for error in report.errors] == expected_messages
        with pytest.raises(CompileError):  # rejected pre-compilation
            compile_plan(plan, inert_registry)
    passline("validator regression pack (9/9 exact messages)")


def test_criterion_seven_check_coverage(inert_registry):
    rejections = [
        (1, make_plan(["CSVParser", "NotANode"])),
        (
            2,
            make_plan(
                ["CSVParser", "CSVExporter"],
                edges=[["CSVParser", "DataFilter"]],
                parameters=full_params(["CSVParser", "CSVExporter"]),
            ),
        ),
        (
            3,
            make_plan(
                ["CSVParser", "SQLiteConnector", "SQLiteReader"],
                parameters=full_params(["CSVParser", "SQLiteConnector", "SQLiteReader"]),
            ),
        ),
        (
            4,
            make_plan(
                ["DataFilter", "DataSorter"],
                edges=[["DataFilter", "DataSorter"], ["DataSorter", "DataFilter"]],
                parameters=full_params(["DataFilter", "DataSorter"]),
            ),
        ),
        (
            5,
            make_plan(
                ["CSVParser", "DataFilter", "CSVExporter"],
                edges=[["CSVParser", "DataFilter"]],
                parameters=full_params(["CSVParser", "DataFilter", "CSVExporter"]),
            ),
        ),
        (
            6,
            make_plan(
                ["CSVParser", "JSONParser", "Logger"],
                edges=[["CSVParser", "Logger"], ["JSONParser", "Logger"]],
                parameters=full_params(["CSVParser", "JSONParser"]),
            ),
        ),
        (
            7,
            make_plan(
                ["CSVParser", "DataSorter", "CSVExporter"],
                parameters={
                    "CSVParser": {"file_path": "a.csv"},
                    "DataSorter": {"by": "salary"},  # 'ascending' deliberately absent
                    "CSVExporter": {"output_path": "out.csv"},
                },
            ),
        ),
    ]
    for expected_check, plan in rejections:
        report = validate_plan(plan, inert_registry)
        assert not report.valid
        assert report.failed_check == expected_check, (
            f"expected failure at CHECK {expected_check}, got {report.failed_check}: "
            f"{[error.message for error in report.errors]}"
        )

    valid_report = validate_plan(roundtrip_plan(), inert_registry)
    assert valid_report.valid and valid_report.failed_check is None
    passline("seven-check coverage (one rejection per check, valid plan passes)")


def test_criterion_compile_determinism(inert_registry):
    digests = {compile_plan(roundtrip_plan(), inert_registry).digest for _ in range(100)}
    assert len(digests) == 1

    mutated = roundtrip_plan()
    mutated.parameters["DataFilter"]["condition"] = "salary > 40001"
    assert compile_plan(mutated, inert_registry).digest not in digests
    passline("compile determinism (100 compiles, 1 digest; mutation changes it)")


def test_criterion_normalization_suite(inert_registry):
    canonical_text = (
        '{"nodes":["CSVParser","CSVExporter"],'
        '"edges":[["CSVParser","CSVExporter"]],'
        '"parameters":{"CSVParser":{"file_path":"a.csv"},"CSVExporter":{"output_path":"out.csv"}},'
        '"flags":[],"glue_code":""}'
    )
    variants = {
        "node dicts": (
            '{"nodes":[{"type":"CSVParser","params":{"file_path":"a.csv"}},'
            '{"type":"CSVExporter","params":{"output_path":"out.csv"}}],'
            '"edges":[["CSVParser","CSVExporter"]],"parameters":{},"flags":[],"glue_code":""}'
        ),
        "edge dicts": (
            '{"nodes":["CSVParser","CSVExporter"],'
            '"edges":[{"from":"CSVParser","to":"CSVExporter"}],'
            '"parameters":{"CSVParser":{"file_path":"a.csv"},"CSVExporter":{"output_path":"out.csv"}},'
            '"flags":[],"glue_code":""}'
        ),
        "arrow strings": (
            '{"nodes":["CSVParser","CSVExporter"],'
            '"edges":["CSVParser -> CSVExporter"],'
            '"parameters":{"CSVParser":{"file_path":"a.csv"},"CSVExporter":{"output_path":"out.csv"}},'
            '"flags":[],"glue_code":""}'
        ),
        "integer refs": (
            '{"nodes":["CSVParser","CSVExporter"],'
            '"edges":[[0,1]],'
            '"parameters":{"CSVParser":{"file_path":"a.csv"},"CSVExporter":{"output_path":"out.csv"}},'
            '"flags":[],"glue_code":""}'
        ),
        "snake_case names": (
            '{"nodes":["csv_parser","csv_exporter"],'
            '"edges":[["csv_parser","csv_exporter"]],'
            '"parameters":{"csv_parser":{"file_path":"a.csv"},"csv_exporter":{"output_path":"out.csv"}},'
            '"flags":[],"glue_code":""}'
        ),
    }
    expected = normalize_plan(parse_plan(canonical_text), inert_registry)
    for label, text in variants.items():
        plan = normalize_plan(parse_plan(text), inert_registry)
        assert plan == expected, f"{label} did not normalize to the canonical plan"
        assert to_canonical_json(plan) == canonical_text, f"{label} canonical bytes differ"

    nodes = ["CSVParser", "DataFilter", "DataSorter", "Logger", "CSVExporter"]
    chain = [
        ["CSVParser", "DataFilter"],
        ["DataFilter", "DataSorter"],
        ["DataSorter", "Logger"],
        ["Logger", "CSVExporter"],
    ]
    for label, edges in {
        "empty": [],
        "partial": [["CSVParser", "DataFilter"], ["DataSorter", "Logger"]],
        "backward": [["CSVExporter", "Logger"], ["Logger", "DataSorter"],
                     ["DataSorter", "DataFilter"], ["DataFilter", "CSVParser"]],
    }.items():
        result = apply_edge_chain_fallback(make_plan(nodes, edges=edges))
        assert result.edges == chain, f"{label} edges did not fall back to the 4-edge chain"
    passline("normalization suite (5 forms canonicalize; fallback builds 4 forward edges)")


def test_criterion_property_topological_sort():
    rng = random.Random(2024)
    for _ in range(500):
        nodes, edges = random_dag(rng, max_nodes=6)
        order = topological_sort(nodes, edges)
        valid_orders = brute_force_topo_orders(nodes, edges)
        assert order in valid_orders
        position = {name: i for i, name in enumerate(nodes)}
        expected = min(valid_orders, key=lambda o: [position[name] for name in o])
        assert order == expected  # earliest-ready tie-break
    passline("topological sort vs brute force (500 random DAGs, n <= 6)")


def test_criterion_property_normalization_idempotence(inert_registry):
    rng = random.Random(77)
    for _ in range(1000):
        text = random_raw_plan_text(inert_registry, rng)
        first = normalize_plan(parse_plan(text), inert_registry)
        second = normalize_plan(parse_plan(to_canonical_json(first)), inert_registry)
        assert second == first

        fallen = apply_edge_chain_fallback(first)
        assert apply_edge_chain_fallback(fallen) == fallen
        if len(fallen.nodes) > 1:
            assert len(fallen.edges) >= len(fallen.nodes) - 1 or fallen == first
        index = {name: i for i, name in enumerate(fallen.nodes)}
        assert all(index[a] < index[b] for a, b in fallen.edges)
    passline("normalize and fallback idempotence (1000 generated plans)")


def test_criterion_property_valid_plans_compile(inert_registry):
    rng = random.Random(4242)
    for _ in range(500):
        plan = random_valid_chain(inert_registry, rng)
        report = validate_plan(plan, inert_registry)
        assert report.valid, [error.message for error in report.errors]
        artifact = compile_plan(plan, inert_registry)
        assert len(artifact.digest) == 64
        assert list(artifact.topo_order) == plan.nodes
    passline("soundness gate (500 random valid chains compile)")


def test_criterion_criteria_semantics(tmp_path):
    rng = random.Random(99)

    def write_column(values, name="v"):
        rows = "\n".join("" if value is None else str(value) for value in values)
        (tmp_path / "t.csv").write_text(f"{name}\n{rows}\n", encoding="utf-8")

    def sorted_check(direction):
        criterion = Criterion(
            kind="file_column_sorted", path="t.csv", column="v", direction=direction
        )
        return check_file_column_sorted(tmp_path, criterion)

    letters = "abcdefgh"
    for _ in range(200):
        # Case-sensitive column matching.
        column = "".join(rng.choice(letters + letters.upper()) for _ in range(6))
        write_column([1, 2], name=column)
        assert check_file_has_column(
            tmp_path, Criterion(kind="file_has_column", path="t.csv", column=column)
        )
        flipped = column.swapcase()
        if flipped != column:
            assert not check_file_has_column(
                tmp_path, Criterion(kind="file_has_column", path="t.csv", column=flipped)
            )

        # Exact row counts.
        n = rng.randrange(0, 25)
        write_column(list(range(n)))
        assert check_file_row_count(
            tmp_path, Criterion(kind="file_row_count", path="t.csv", count=n)
        )
        assert not check_file_row_count(
            tmp_path, Criterion(kind="file_row_count", path="t.csv", count=n + 1)
        )

        # Substring containment over stdout only.
        stdout = "".join(rng.choice(letters) for _ in range(rng.randrange(1, 30)))
        lo = rng.randrange(0, len(stdout))
        hi = rng.randrange(lo, len(stdout)) + 1
        result = ExecutionResult(0, stdout=stdout, stderr="", duration=0.0, timed_out=False)
        assert check_stdout_contains(
            result, Criterion(kind="stdout_contains", substring=stdout[lo:hi])
        )
        assert not check_stdout_contains(
            result, Criterion(kind="stdout_contains", substring=stdout + "Z!")
        )

        # Non-strict monotone sort with nulls excluded, checked both ways
        # against an independent sorted() oracle.
        values = [rng.choice([None, rng.randrange(0, 6)]) for _ in range(rng.randrange(0, 10))]
        if rng.random() < 0.4:
            present = sorted(value for value in values if value is not None)
            if rng.random() < 0.5:
                present.reverse()
            iterator = iter(present)
            values = [None if value is None else next(iterator) for value in values]
        write_column(values)
        non_null = [float(value) for value in values if value is not None]
        assert sorted_check("ascending") == (non_null == sorted(non_null))
        assert sorted_check("descending") == (non_null == sorted(non_null, reverse=True))

        # Duality: both directions pass iff all non-null values are equal.
        both = sorted_check("ascending") and sorted_check("descending")
        assert both == (len(set(non_null)) <= 1)
    passline("criteria semantics (columns, counts, substrings, sort duality)")


def test_criterion_cost_arithmetic():
    pricing = Pricing()
    assert abs(pricing.cost(1_000_000, 0) - 0.15) < 1e-9
    assert abs(pricing.cost(0, 1_000_000) - 0.60) < 1e-9
    assert abs(pricing.cost(0, 0) - 0.0) < 1e-9
    passline("cost arithmetic ($0.15/1M input, $0.60/1M output)")
