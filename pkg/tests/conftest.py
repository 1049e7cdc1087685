import cmath

import pytest


def cclose(a, b, tol=1e-10):
    """Absolute closeness for complex values."""
    return abs(complex(a) - complex(b)) <= tol


def crel(a, b, tol=1e-10):
    """Relative closeness for complex values."""
    a = complex(a)
    b = complex(b)
    return abs(a - b) <= tol * max(abs(a), abs(b), 1e-300)


@pytest.fixture(scope="session")
def zero_table():
    from higherzeta.explicit import default_zero_table
    return default_zero_table()
