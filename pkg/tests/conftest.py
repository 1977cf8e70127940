import sys
from pathlib import Path

import pytest

# Make the sibling helper modules (oracle, corpus) importable from tests.
sys.path.insert(0, str(Path(__file__).parent))

from corpus import full_corpus


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()
