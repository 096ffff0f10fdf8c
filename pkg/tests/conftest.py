import json
from pathlib import Path

import pytest

from metricmat.corpus import corpus, corpus_graphs

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def cor():
    return corpus()


@pytest.fixture(scope="session")
def graphs():
    return corpus_graphs()


@pytest.fixture(scope="session")
def naive_counts():
    doc = json.loads((FIXTURES / "naive_counts.json").read_text())
    return doc["counts"]


@pytest.fixture
def inputs():
    return FIXTURES / "inputs"
