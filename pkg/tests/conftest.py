import pathlib

import pytest

FIXTURE_DIR = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


def fixture_path(name: str) -> str:
    return str(FIXTURE_DIR / f"{name}.json")
