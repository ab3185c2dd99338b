import doctest

import pytest

from tlimm import classify, coloring, immanant, limits, perm, render, tl, verify


@pytest.mark.parametrize(
    "module", [perm, tl, coloring, immanant, classify, render, limits, verify]
)
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
