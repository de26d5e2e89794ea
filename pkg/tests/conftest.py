import json
import shutil
import sys
from pathlib import Path

import pytest

from plancompiler import default_registry_path, load_registry

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))


@pytest.fixture(scope="session")
def registry_data():
    """Raw node data of the shipped registry file."""
    return json.loads(default_registry_path().read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def inert_registry(tmp_path_factory):
    """The shipped 25-node registry backed by inert text templates, so the
    primary suite runs without the real template corpus."""
    root = tmp_path_factory.mktemp("inert_registry")
    target = root / "registry.json"
    shutil.copy(default_registry_path(), target)
    data = json.loads(target.read_text(encoding="utf-8"))
    for node in data["nodes"]:
        template = root / node["template_path"]
        template.parent.mkdir(parents=True, exist_ok=True)
        template.write_text(f"# inert template for {node['name']}\n", encoding="utf-8")
    return load_registry(target)


@pytest.fixture(scope="session")
def real_registry():
    """The shipped registry backed by the real node template corpus."""
    return load_registry(default_registry_path(), templates_root=REPO_ROOT / "node_templates")


@pytest.fixture(scope="session")
def fixtures_dir(tmp_path_factory):
    """Generated benchmark fixtures, shared across the session."""
    from node_templates.generate_fixtures import generate_fixtures

    out = tmp_path_factory.mktemp("fixtures")
    generate_fixtures(out)
    return out
