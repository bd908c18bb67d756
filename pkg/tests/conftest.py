"""
Shared fixtures for the plasma response tests.
"""

import pytest
from hypothesis import settings as hypothesis_settings

from plasma_response.models import DimensionlessQuery

# kernel quadratures make single examples slow
hypothesis_settings.register_profile("default", deadline=None, max_examples=60)
hypothesis_settings.load_profile("default")


@pytest.fixture
def drude_query() -> DimensionlessQuery:
    """Point deep in the q -> 0 regime."""
    return DimensionlessQuery.build(q=1e-4, x=1.0, y=0.5)


@pytest.fixture
def plasma_query() -> DimensionlessQuery:
    """Generic point carrying x_p."""
    return DimensionlessQuery.build(q=1.0, x=0.5, y=0.1, x_p=1.0)
