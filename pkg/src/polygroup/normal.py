"""Value transforms of fuzzy n-ary subgroups and normality reporting.

The transforms act on memberships only, through order-preserving maps, so
they carry fuzzy n-ary subgroups to fuzzy n-ary subgroups:

* ``normalize_plus``  -- shift up by 1 - max(mu), making the top value 1;
* ``power``           -- raise every membership to a positive rational
                         exponent (symbolic when irrational);
* ``compose_monotone``-- apply a strictly increasing breakpoint map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolated, NotIncreasing
from .fuzzy import (
    FuzzySet,
    check_fuzzy_nary_subgroup,
    level_subset,
    _require_nary,
)
from .membership import PowerValue, coerce, rational_power
from .nary import enumerate_subgroups, subgroup_witness


def mu_maximal_elements(mu):
    """Elements attaining the largest membership, in increasing order."""
    top = mu.max_value()
    return tuple(x for x, v in enumerate(mu.values) if v == top)


def normalize_plus(mu):
    """mu(x) + 1 - max(mu): the smallest normal fuzzy set dominating mu.

    Defined for plain rational memberships (a symbolic power plus a rational
    is irrational and would leave the exact value domain).
    """
    top = mu.max_value()
    if any(isinstance(v, PowerValue) for v in mu.values) or isinstance(
        top, PowerValue
    ):
        raise TypeError("normalize_plus needs plain rational memberships")
    shift = Fraction(1) - top
    return FuzzySet(mu.group, [v + shift for v in mu.values])


def power(mu, t):
    """Raise every membership to the positive rational exponent t."""
    t = Fraction(t)
    return FuzzySet(mu.group, [rational_power(v, t) for v in mu.values])


def compose_monotone(mu, breakpoints):
    """Apply a value map given as breakpoints; it is consulted only on the
    attained memberships and must be strictly increasing there."""
    table = {coerce(k): coerce(v) for k, v in breakpoints.items()}
    attained = sorted(set(mu.values))
    for v in attained:
        if v not in table:
            raise ValueError(f"value map is not defined at {v}")
    for a, b in zip(attained, attained[1:]):
        if not table[a] < table[b]:
            raise NotIncreasing((a, b))
    return FuzzySet(mu.group, [table[v] for v in mu.values])


@dataclass(frozen=True)
class NormalityReport:
    mu_maximal: tuple
    is_normal: bool                  # the maximum membership is 1
    g_mu: frozenset                  # the top level subset
    g_mu_is_maximal_subgroup: bool   # proper, with nothing strictly between
    is_two_valued: bool              # attained values inside {0, 1}
    is_completely_normal: bool       # normal and attaining 0


def normality_report(mu):
    """Normality facts about a fuzzy n-ary subgroup."""
    g = _require_nary(mu)
    if not check_fuzzy_nary_subgroup(mu).passed:
        raise HypothesisViolated(
            "fuzzy-subgroup", "membership set fails the subgroup check"
        )
    top = mu.max_value()
    g_mu = level_subset(mu, top)
    carrier = frozenset(range(g.size))
    maximal = False
    if subgroup_witness(g, g_mu) is None and g_mu != carrier:
        maximal = True
        for sub in enumerate_subgroups(g):
            if g_mu < sub < carrier:
                maximal = False
    zero = Fraction(0)
    one = Fraction(1)
    return NormalityReport(
        mu_maximal=mu_maximal_elements(mu),
        is_normal=top == one,
        g_mu=g_mu,
        g_mu_is_maximal_subgroup=maximal,
        is_two_valued=all(v == zero or v == one for v in mu.values),
        is_completely_normal=top == one and mu.min_value() == zero,
    )
