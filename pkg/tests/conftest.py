from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures" / "oeis"


@pytest.fixture
def oeis_fixtures() -> Path:
    return FIXTURES
