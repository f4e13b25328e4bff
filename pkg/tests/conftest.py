import json
from pathlib import Path

import pytest

import bondlekit as bk

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_bondle(name: str) -> bk.FiniteBondle:
    return bk.FiniteBondle.from_json(json.loads((FIXTURES / name).read_text()))


def load_weights(name: str) -> bk.BoltzmannWeights:
    return bk.BoltzmannWeights.from_json(json.loads((FIXTURES / name).read_text()))


def load_diagram(name: str) -> bk.BondedDiagram:
    return bk.parse_bgc((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def bondle_p() -> bk.FiniteBondle:
    return load_bondle("p_bondle.json")


@pytest.fixture(scope="session")
def bondle_1() -> bk.FiniteBondle:
    return load_bondle("ex1_bondle.json")


@pytest.fixture(scope="session")
def bondle_2() -> bk.FiniteBondle:
    return load_bondle("ex2_bondle.json")


@pytest.fixture(scope="session")
def weights_1() -> bk.BoltzmannWeights:
    return load_weights("ex1_weights.json")


@pytest.fixture(scope="session")
def weights_2() -> bk.BoltzmannWeights:
    return load_weights("ex2_weights.json")


@pytest.fixture(scope="session")
def diagrams() -> dict[str, bk.BondedDiagram]:
    return {name: load_diagram(f"{name}.bgc") for name in ("P", "P1", "P2", "P3", "P4")}
