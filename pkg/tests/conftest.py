import os

import pytest

from chardeg.degrees import DegreeEngine


@pytest.fixture(scope="session")
def engine():
    """One shared engine so degree sets are computed once per test run."""
    return DegreeEngine(workers=os.cpu_count() or 1)
