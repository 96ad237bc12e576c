import time

import pytest

from evengap.closedsets import stable_count_by_closed_sets
from evengap.tree import census


@pytest.fixture(scope="session")
def full_census():
    """Stratified census rows for genus 0..28, with the wall time."""
    started = time.perf_counter()
    rows = census(28, workers=2)
    return rows, time.perf_counter() - started


@pytest.fixture(scope="session")
def stable_closed():
    """Stable stratum counts via closed sets for gamma 0..14, with the
    wall time."""
    started = time.perf_counter()
    values = [stable_count_by_closed_sets(k, workers=2) for k in range(15)]
    return values, time.perf_counter() - started
