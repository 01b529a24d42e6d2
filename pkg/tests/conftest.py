import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from detschemes import validate  # noqa: E402

SURFACE = [[2, 2, 2, 1], [3, 3, 3, 2]]
SCROLL = [[1, 1, 1, 1], [1, 1, 1, 1]]

@pytest.fixture
def surface():
    return validate(SURFACE)


@pytest.fixture
def scroll():
    return validate(SCROLL)
