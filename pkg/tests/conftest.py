"""Shared fixtures: the worked-example groups and fuzzy sets every suite
reuses, plus the sweep corpora for the agreement and operator checks."""

import functools
import itertools
from fractions import Fraction

import pytest

from polygroup import BinaryGroup, FuzzySet, derive, validate_group

F = Fraction


@functools.lru_cache(maxsize=None)
def derived_group(m, n, b):
    """Validated n-ary group x_1 + ... + x_n + b on Z_m (cached)."""
    return validate_group(derive(BinaryGroup.cyclic(m), b, n))


def ternary_corpus():
    """Every ternary group derived from Z2, Z3, Z4, all shift constants."""
    return [
        (m, b, derived_group(m, 3, b))
        for m in (2, 3, 4)
        for b in range(m)
    ]


def small_value_sets(m, values=None):
    """All membership vectors over a small value grid, in lex order."""
    if values is None:
        values = (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))
    return itertools.product(values, repeat=m)


@pytest.fixture(scope="session")
def ternary_z4():
    return derived_group(4, 3, 0)


@pytest.fixture(scope="session")
def four_z4():
    return derived_group(4, 4, 0)


@pytest.fixture(scope="session")
def ternary_z2():
    return derived_group(2, 3, 0)


@pytest.fixture(scope="session")
def ternary_z12():
    return derived_group(12, 3, 0)


@pytest.fixture(scope="session")
def unipotent_z3():
    return derived_group(3, 3, 1)


@pytest.fixture(scope="session")
def mu_top_half(four_z4):
    """1 at the neutral element 0, 1/2 elsewhere, on the 4-ary group."""
    return FuzzySet(four_z4, [F(1), F(1, 2), F(1, 2), F(1, 2)])


@pytest.fixture(scope="session")
def mu_three_level(ternary_z4):
    """The (1, 3/10, 1/2, 3/10) fuzzy ternary subgroup on Z4."""
    return FuzzySet(ternary_z4, [F(1), F(3, 10), F(1, 2), F(3, 10)])


@pytest.fixture(scope="session")
def mu_odd_chain(ternary_z12):
    """Chain-induced memberships on Z12: 11, then 5, then the other odds."""
    values = []
    for x in range(12):
        if x == 11:
            values.append(F(1))
        elif x == 5:
            values.append(F(2, 3))
        elif x % 2 == 1:
            values.append(F(1, 3))
        else:
            values.append(F(0))
    return FuzzySet(ternary_z12, values)


@pytest.fixture(scope="session")
def mu_two_point(ternary_z2):
    """3/10 at 0 and 1/10 at 1 on the ternary group over Z2."""
    return FuzzySet(ternary_z2, [F(3, 10), F(1, 10)])
