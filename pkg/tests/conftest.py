# tests/conftest.py

import pytest

from McCoy.utils.evaluator import Evaluator

DESK_RINGS = [
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z8",
    "TruncSeries(Z2,3)", "Prod(Z2,Z2)", "Prod(Z2,Z4)",
    "Mat(Z2,2)", "Tri(Z2,2)", "S(Z2,2)", "T(Z2,2)", "T(Z2,3)",
    "SkewTri(Prod(Z2,Z2),2,swap)", "Triangular(Z2,Z2,regular)",
    "Opp(Tri(Z2,2))", "Quot(Tri(Z2,2),{[[0,1],[0,0]]})",
]


@pytest.fixture(scope="session")
def evaluator() -> Evaluator:
    return Evaluator()


@pytest.fixture(scope="session")
def ring(evaluator):
    """Evaluate a ring expression, memoized across the session."""
    return evaluator
