"""Shared fixtures: a session-wide cache of census runs.

Several test modules consult the same enumeration results; computing each
(k, n) sweep once keeps the whole suite inside the stated time budgets.
"""

import pytest

from braidcensus.census import census


@pytest.fixture(scope="session")
def census_cache():
    cache = {}

    def get(k, n, workers=1):
        key = (k, n)
        if key not in cache:
            cache[key] = census(k, n, workers=workers)
        return cache[key]

    return get
