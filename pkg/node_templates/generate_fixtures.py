"""Seeded benchmark fixture generator.

Writes the seven tabular fixtures (plus two auxiliary SQLite files) with a
fixed random seed, then asserts every benchmark-critical count before
returning: row counts 10/20/40/25/23/30/50, sales deduping 40 -> 38,
27 sales rows with revenue > 100, 15 products with price > 50, and exactly
one person with a null salary.  Running it twice produces byte-identical
files.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sqlite3
from pathlib import Path

SEED = 20240917

FIRST_NAMES = [
    "Ada", "Boris", "Carol", "Deepak", "Elena", "Farid", "Grace", "Hugo",
    "Iris", "Jonas", "Kira", "Liam", "Mona", "Nils", "Opal", "Pavel",
    "Quinn", "Rosa", "Sven", "Tara", "Uma", "Viktor", "Wendy", "Xanthe",
    "Yusuf", "Zelda",
]
LAST_NAMES = [
    "Alvarez", "Brandt", "Chen", "Dubois", "Eriksen", "Fischer", "Garcia",
    "Hansen", "Ito", "Jansen", "Kovacs", "Larsen", "Moreau", "Novak",
    "Okafor", "Petrov", "Quist", "Rossi", "Sato", "Tanaka", "Unger",
    "Vogel", "Weber", "Xu", "Yamada", "Zhang",
]
DEPARTMENTS = ["engineering", "sales", "marketing", "hr"]
REGIONS = ["north", "south", "east", "west"]
PRODUCTS = ["widget", "gadget", "sprocket", "gizmo", "doohickey"]
EVENT_TYPES = ["login", "logout", "purchase", "page_view", "signup"]
STATUSES = ["active", "inactive", "pending"]


def _name(rng: random.Random) -> str:
    return f"{rng.choice(FIRST_NAMES)} {rng.choice(LAST_NAMES)}"


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path: Path, rows: list[dict]) -> None:
    path.write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")


def _people(rng: random.Random) -> list[list]:
    rows = []
    for index in range(10):
        salary = rng.randrange(30_000, 90_000, 500)
        rows.append([_name(rng), rng.randint(21, 64), salary])
    rows[4][2] = ""  # exactly one null salary
    return rows


def _customers(rng: random.Random) -> list[list]:
    return [
        [1000 + index, _name(rng), rng.choice(STATUSES), rng.randint(2015, 2024)]
        for index in range(20)
    ]


def _sales(rng: random.Random) -> list[list]:
    # 27 unique rows above the revenue threshold, 11 at or below it, plus
    # full-row duplicates of two low-revenue rows: 40 raw rows, 38 deduped,
    # and the revenue > 100 filter yields 27 before and after dedup.
    rows = []
    for index in range(27):
        revenue = round(rng.uniform(101.0, 500.0), 2)
        rows.append([5000 + index, rng.choice(REGIONS), rng.choice(PRODUCTS), revenue])
    low = []
    for index in range(11):
        revenue = round(rng.uniform(5.0, 99.0), 2)
        low.append([5027 + index, rng.choice(REGIONS), rng.choice(PRODUCTS), revenue])
    rows.extend(low)
    rows.append(list(low[2]))
    rows.append(list(low[7]))
    rng.shuffle(rows)
    return rows


def _products(rng: random.Random) -> list[dict]:
    rows = []
    for index in range(25):
        expensive = index < 15
        price = round(rng.uniform(51.0, 200.0) if expensive else rng.uniform(5.0, 49.0), 2)
        rows.append(
            {
                "id": 1 + index,
                "name": f"{rng.choice(PRODUCTS)}-{rng.randint(100, 999)}",
                "category": rng.choice(["tools", "parts", "kits"]),
                "price": price,
            }
        )
    rng.shuffle(rows)
    return rows


def _employees(rng: random.Random) -> list[list]:
    return [
        [_name(rng), rng.choice(DEPARTMENTS), rng.randrange(28_000, 95_000, 250)]
        for _ in range(23)
    ]


def _predictions(rng: random.Random) -> list[list]:
    return [
        [1 + index, rng.choice(["alpha", "beta"]), round(rng.random(), 4)]
        for index in range(30)
    ]


def _events(rng: random.Random) -> list[dict]:
    return [
        {
            "event_id": 1 + index,
            "type": rng.choice(EVENT_TYPES),
            "user": _name(rng),
            "timestamp": f"2024-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}",
        }
        for index in range(50)
    ]


def _write_sqlite(path: Path, table: str, header: list[str], rows: list[list]) -> None:
    if path.exists():
        path.unlink()
    conn = sqlite3.connect(path)
    try:
        columns = ", ".join(header)
        placeholders = ", ".join("?" for _ in header)
        conn.execute(f"CREATE TABLE {table} ({columns})")
        conn.executemany(f"INSERT INTO {table} VALUES ({placeholders})", rows)
        conn.commit()
    finally:
        conn.close()


def generate_fixtures(output_dir: str | Path) -> dict[str, Path]:
    """Write all fixtures into ``output_dir`` and verify their contracts."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    people = _people(rng)
    customers = _customers(rng)
    sales = _sales(rng)
    products = _products(rng)
    employees = _employees(rng)
    predictions = _predictions(rng)
    events = _events(rng)

    paths = {
        "people.csv": output_dir / "people.csv",
        "customers.csv": output_dir / "customers.csv",
        "sales.csv": output_dir / "sales.csv",
        "products.json": output_dir / "products.json",
        "employees.csv": output_dir / "employees.csv",
        "predictions.csv": output_dir / "predictions.csv",
        "events.json": output_dir / "events.json",
    }
    _write_csv(paths["people.csv"], ["name", "age", "salary"], people)
    _write_csv(paths["customers.csv"], ["customer_id", "name", "status", "signup_year"], customers)
    _write_csv(paths["sales.csv"], ["order_id", "region", "product", "revenue"], sales)
    _write_json(paths["products.json"], products)
    _write_csv(paths["employees.csv"], ["name", "dept", "salary"], employees)
    _write_csv(paths["predictions.csv"], ["id", "model", "score"], predictions)
    _write_json(paths["events.json"], events)

    # Auxiliary SQLite fixtures; generated for completeness, not referenced
    # by any shipped task.
    _write_sqlite(
        output_dir / "existing.db", "records", ["name", "age", "salary"],
        [[name, age, salary if salary != "" else None] for name, age, salary in people],
    )
    _write_sqlite(
        output_dir / "scores.db", "scores", ["id", "model", "score"], predictions
    )

    _assert_contracts(people, customers, sales, products, employees, predictions, events)
    return paths


def _assert_contracts(people, customers, sales, products, employees, predictions, events):
    assert len(people) == 10, f"people.csv must have 10 rows, got {len(people)}"
    null_salaries = sum(1 for row in people if row[2] == "")
    assert null_salaries == 1, f"people.csv must have exactly 1 null salary, got {null_salaries}"
    assert len(customers) == 20, f"customers.csv must have 20 rows, got {len(customers)}"

    assert len(sales) == 40, f"sales.csv must have 40 rows, got {len(sales)}"
    unique_sales = set(tuple(row) for row in sales)
    assert len(unique_sales) == 38, f"sales.csv must dedup to 38 rows, got {len(unique_sales)}"
    high = sum(1 for row in sales if row[3] > 100)
    high_unique = sum(1 for row in unique_sales if row[3] > 100)
    assert high == 27, f"sales.csv must have 27 rows with revenue > 100, got {high}"
    assert high_unique == 27, f"deduped sales must keep 27 rows with revenue > 100, got {high_unique}"

    assert len(products) == 25, f"products.json must have 25 rows, got {len(products)}"
    expensive = sum(1 for row in products if row["price"] > 50)
    assert expensive == 15, f"products.json must have 15 rows with price > 50, got {expensive}"

    assert len(employees) == 23, f"employees.csv must have 23 rows, got {len(employees)}"
    assert len(predictions) == 30, f"predictions.csv must have 30 rows, got {len(predictions)}"
    assert len(events) == 50, f"events.json must have 50 rows, got {len(events)}"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "output_dir",
        nargs="?",
        default="benchmark/fixtures/generated",
        help="directory to write fixtures into",
    )
    args = parser.parse_args(argv)
    paths = generate_fixtures(args.output_dir)
    for name, path in sorted(paths.items()):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
