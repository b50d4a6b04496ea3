import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def load_fixture(name):
    with open(FIXTURES / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def bessel_fixture():
    return load_fixture("bessel_k.json")


@pytest.fixture(scope="session")
def e1_fixture():
    return load_fixture("e1.json")


@pytest.fixture(scope="session")
def sbar_fixture():
    return load_fixture("sbar_laplace.json")


@pytest.fixture(scope="session")
def golden_times_fixture():
    return load_fixture("golden_times.json")
