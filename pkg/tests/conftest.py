import pytest

from lazforge import build_laz_set, legendre_shifts, msequence_shifts, quad_lpnf


@pytest.fixture(scope="session")
def set_7_7():
    """N = K = 7 quadratic set over Legendre shifts (49 entries per row)."""
    return build_laz_set(quad_lpnf(7, 1, 0, 7), legendre_shifts(7))


@pytest.fixture(scope="session")
def set_7_11():
    """N = 7, K = 11 quadratic set over m-sequence shifts (length 77)."""
    return build_laz_set(quad_lpnf(7, 1, 0, 11), msequence_shifts(3))
