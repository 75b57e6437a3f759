"""Run the documented interactive examples."""

import doctest

from zerohecke import rootdata, weyl


def test_rootdata_doctests():
    assert doctest.testmod(rootdata).failed == 0


def test_weyl_doctests():
    assert doctest.testmod(weyl).failed == 0
