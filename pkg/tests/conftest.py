"""
Shared fixtures and hypothesis strategies
"""
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from src.core.linalg import Matrix, Vector
from src.core.scalars import FIELD_Q, Scalar, rational_function
from src.services.catalog import catalog_get
from src.services.morphisms import FiniteGroupAction


# --- strategies ---------------------------------------------------------

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)

q_scalars = small_fractions.map(lambda f: Scalar.of(f, FIELD_Q))

_coefficients = st.lists(st.integers(min_value=-4, max_value=4), min_size=0, max_size=3)


@st.composite
def qa_scalars(draw):
    num = draw(_coefficients)
    den = draw(_coefficients.filter(lambda c: any(c)))
    return rational_function(num, den)


def q_vectors(dim):
    return st.lists(st.integers(min_value=-5, max_value=5), min_size=dim, max_size=dim).map(
        lambda values: Vector.of(values, FIELD_Q)
    )


# --- helpers ------------------------------------------------------------

def vec(*values, field=FIELD_Q):
    """Vector from coordinates, e.g. vec(1, -1, 0)"""
    return Vector.of([Fraction(v) for v in values], field)


def e(index, dim, field=FIELD_Q):
    """1-based basis vector e_index"""
    return Vector.basis(index - 1, dim, field)


def random_invertible(dim, rng, field=FIELD_Q):
    """Product of a unit lower and a unit upper triangular integer matrix"""
    lower = [[1 if i == j else (rng.randint(-3, 3) if j < i else 0) for j in range(dim)] for i in range(dim)]
    upper = [[1 if i == j else (rng.randint(-3, 3) if j > i else 0) for j in range(dim)] for i in range(dim)]
    return Matrix.of(lower, field) @ Matrix.of(upper, field)


# --- fixtures -----------------------------------------------------------

@pytest.fixture
def mu_1():
    return catalog_get("mu_1")


@pytest.fixture
def lambda_3():
    return catalog_get("lambda_3")


@pytest.fixture
def lambda_6():
    return catalog_get("lambda_6")


@pytest.fixture
def rho_1():
    return catalog_get("rho_1")


@pytest.fixture
def counterexample():
    return catalog_get("counterexample_s4")


@pytest.fixture
def swap_action():
    """Order-2 action on lambda_3: e1 <-> e2, e3 -> -e3"""
    g = Matrix.of([[0, 1, 0], [1, 0, 0], [0, 0, -1]], FIELD_Q)
    return FiniteGroupAction([Matrix.identity(3, FIELD_Q), g], 0, [[0, 1], [1, 0]])


@pytest.fixture
def rng():
    return random.Random(20240611)
