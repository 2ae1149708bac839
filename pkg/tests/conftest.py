import pytest

from monoalg.enumeration import enumerate_up_to_iso


@pytest.fixture(scope="session")
def corpus():
    """Representatives of every isomorphism class on 1..6 points."""
    return {n: enumerate_up_to_iso(n).representatives for n in range(1, 7)}
