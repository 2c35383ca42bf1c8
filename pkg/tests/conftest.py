from itertools import combinations

import pytest

from topotrans.schubert import GrassmannContext


def grassmannians(dmax, dmin=2, ring="Z2"):
    for d in range(dmin, dmax + 1):
        for m in range(1, d):
            yield GrassmannContext(d, m, ring)


@pytest.fixture
def g42():
    return GrassmannContext(4, 2)


@pytest.fixture
def g43():
    return GrassmannContext(4, 3)
