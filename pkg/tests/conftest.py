from pathlib import Path

import pytest

from quivercuts.docio import parse_quiver_document
from quivercuts.tensor import dynkin_quiver, parse_dynkin_spec, tensor_qwc

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def b2b2_split():
    """The 5-vertex split of B2 x B2, arrows a..h, four signed 3-cycles."""
    return parse_quiver_document(fixture_text("b2b2_split.json"))


@pytest.fixture(scope="session")
def circle():
    """The 4-vertex diamond whose canvas is a circle."""
    return parse_quiver_document(fixture_text("circle.json"))


@pytest.fixture(scope="session")
def a3b2():
    """The 6-vertex tensor product of A3 (1<2>3) with B2 (1>2)."""
    left = dynkin_quiver(parse_dynkin_spec("A3:1<2>3"))
    right = dynkin_quiver(parse_dynkin_spec("B2:1>2"))
    return tensor_qwc(left, right)
