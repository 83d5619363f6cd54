import os
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


def data_dir() -> Path:
    return Path(os.environ.get("GRAPHSAMPLE_DATA", REPO_ROOT / "data"))


def dataset_path(name: str) -> Path | None:
    p = data_dir() / name
    return p if p.is_file() else None


@pytest.fixture(scope="session")
def cora_path():
    p = dataset_path("cora.txt")
    if p is None:
        pytest.skip("cora.txt not present; run scripts/fetch_datasets.py")
    return p


@pytest.fixture(scope="session")
def topology_path():
    p = dataset_path("topology.txt")
    if p is None:
        pytest.skip("topology.txt not present; run scripts/fetch_datasets.py")
    return p
