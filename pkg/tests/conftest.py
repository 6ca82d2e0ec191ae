"""Shared fixtures: the two worked-example data used across the suite."""

import pytest

from treeworks.datum import parse_datum


# A (3,4)-datum with one self-inverse a-letter (tau1 = 1).  Used for the
# rectangle-completion golden tests.
EXAMPLE_34_TEXT = """\
datum d1=3 d2=4 tau1=1 tau2=0
square a1 b1 a1 b2^-1
square a1 b2 a1 b2
square a1 b1^-1 a2 b1^-1
square a2 b2 a2 b2^-1
"""

# A torsion-free (6,6)-datum with nine geometric squares.  Its two
# projection closures are G({0}*,{0}*) and G({0,1},{0,1})*.
EXAMPLE_66_TEXT = """\
datum d1=6 d2=6 tau1=0 tau2=0
square a1 b1 a1 b1^-1
square a1 b2 a1 b2^-1
square a1 b3 a2 b3
square a1 b3^-1 a3 b3^-1
square a2 b1 a3 b1^-1
square a2 b2 a3^-1 b3^-1
square a2 b3^-1 a3^-1 b2
square a2 b2^-1 a3^-1 b1
square a2 b1^-1 a3^-1 b2^-1
"""


@pytest.fixture(scope="session")
def example34():
    return parse_datum(EXAMPLE_34_TEXT)


@pytest.fixture(scope="session")
def example66():
    return parse_datum(EXAMPLE_66_TEXT)
