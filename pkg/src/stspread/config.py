"""Size caps for the search-heavy operations.

Each cap bounds the order (point count) a given routine will accept before
raising TooLargeError.  The environment variable STS_MAX_ORDER, when set to a
positive integer, overrides every order cap at once; callers that need a
one-off override can also pass explicit keyword arguments where offered.
"""

import os

# Largest system any construction will build.
MAX_CONSTRUCTION_ORDER = 2047

# Exhaustive spreading-set search (min_spreading_size).
MAX_MIN_SPREAD_ORDER = 63

# Full subset enumerations (minimal spreading sets, saturating sets).
MAX_ENUMERATION_ORDER = 31

# PG(n,2) hyperplane families and the related bounds.
MAX_HYPERPLANE_DIM = 10

# Dimension-theorem spot checks run on PG(d,2) up to this d.
MAX_DIMENSION_CHECK_DIM = 5

# Two-sizes construction input n (AG(n-1,3) must stay desk-scale).
MAX_SECTION_N = 6


def order_cap(default: int) -> int:
    """Return the effective order cap: STS_MAX_ORDER when set, else default."""
    raw = os.environ.get("STS_MAX_ORDER")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def section_n_cap() -> int:
    """Largest n accepted by the two-sizes construction."""
    raw = os.environ.get("STS_MAX_ORDER")
    if raw is None:
        return MAX_SECTION_N
    cap = order_cap(3 ** (MAX_SECTION_N - 1))
    n = MAX_SECTION_N
    while 3 ** n <= cap:
        n += 1
    return n
