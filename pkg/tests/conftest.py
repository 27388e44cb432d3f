from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from lfuzzy.lattice import FuzzySet, Universe, load_collection

DATA = Path(__file__).resolve().parent.parent / "data"
EXAMPLE_FILE = DATA / "worked_example.json"


@pytest.fixture(scope="session")
def ex():
    return load_collection(EXAMPLE_FILE).sets


def grades(g: int = 4):
    return st.integers(0, g).map(lambda i: Fraction(i, g))


def fuzzy_lists(n: int, g: int = 4):
    return st.lists(grades(g), min_size=n, max_size=n)


def fuzzy_sets(n: int = 3, g: int = 4, count: int = 1):
    """``count`` fuzzy sets on the same universe of size ``n``, grid ``g``."""
    U = Universe.of_size(n)
    one = fuzzy_lists(n, g).map(lambda xs: FuzzySet(U, xs))
    return st.tuples(*[one] * count)


def any_grades():
    # denominators up to 12 reach grades the default grid never produces
    return st.fractions(min_value=0, max_value=1, max_denominator=12)
