"""Shared fixtures: the acceptance grid and its built codes."""

import pytest

from lrcodes import build_code, validate_params
from lrcodes.errors import LrcError

GRID_Q = (13, 16, 17)
GRID_R = (2, 3, 4)
BUDGET = 5_000_000


def derive_grid():
    """Every valid (q, n, k, r) in the acceptance grid: 5 <= n, s != 1,
    k within the rate bound, and q^k small enough to enumerate."""
    grid = []
    for q in GRID_Q:
        for r in GRID_R:
            for n in range(5, q + 1):
                for k in range(1, n + 1):
                    if q**k > BUDGET:
                        break
                    try:
                        grid.append(validate_params(q, n, k, r))
                    except LrcError:
                        continue
    return grid


@pytest.fixture(scope="session")
def grid_params():
    return derive_grid()


@pytest.fixture(scope="session")
def grid_specs(grid_params):
    return [(p, build_code(p)) for p in grid_params]


@pytest.fixture
def ref_spec():
    """The worked reference code: (n, k, r) = (10, 5, 3) over GF(13), d = 4."""
    return build_code(validate_params(13, 10, 5, 3))
