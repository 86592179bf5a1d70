"""Randomized invariants over derived groups and rational memberships."""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from polygroup import (
    BinaryGroup,
    FuzzySet,
    check_fuzzy_binary_subgroup,
    check_fuzzy_nary_subgroup,
    check_thm28,
    check_via_levels,
    compose_monotone,
    enumerate_subgroups,
    find_isomorphism,
    from_chain,
    from_nested,
    from_table,
    hosszu_compose,
    hosszu_decompose,
    level_family,
    mu_maximal_elements,
    normalize_plus,
    power,
    retract,
    validate_group,
)
from conftest import derived_group

POOL = tuple(sorted({
    Fraction(p, q) for q in (1, 2, 3, 4, 5, 6, 8, 10, 12) for p in range(q + 1)
}))


@st.composite
def group_params(draw, max_size=8, arities=(3, 4)):
    m = draw(st.integers(min_value=1, max_value=max_size))
    n = draw(st.sampled_from(arities))
    b = draw(st.integers(min_value=0, max_value=m - 1))
    return m, n, b


@st.composite
def group_and_values(draw, max_size=6, arities=(3, 4)):
    m, n, b = draw(group_params(max_size=max_size, arities=arities))
    g = derived_group(m, n, b)
    vals = draw(st.lists(st.sampled_from(POOL), min_size=m, max_size=m))
    return g, FuzzySet(g, vals)


@lru_cache(maxsize=None)
def subgroups_of(m, n, b):
    return enumerate_subgroups(derived_group(m, n, b))


@st.composite
def passing_fuzzy(draw, max_size=6, arities=(3, 4)):
    """A fuzzy subgroup built from a random nested subgroup chain."""
    m, n, b = draw(group_params(max_size=max_size, arities=arities))
    g = derived_group(m, n, b)
    full = frozenset(range(m))
    chain = [draw(st.sampled_from(subgroups_of(m, n, b)))]
    while chain[-1] != full and draw(st.booleans()):
        bigger = [s for s in subgroups_of(m, n, b) if chain[-1] < s and s != full]
        if not bigger:
            break
        chain.append(draw(st.sampled_from(bigger)))
    if chain[-1] != full:
        chain.append(full)
    values = draw(st.lists(st.sampled_from(POOL), unique=True,
                           min_size=len(chain), max_size=len(chain)))
    values.sort(reverse=True)
    return g, from_nested(g, values, chain)


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


@st.composite
def divisor_chain_values(draw, m, start):
    """A strictly shrinking divisor chain d_1 > d_2 > ... > 1 from one of
    ``start``, with strictly decreasing memberships attached."""
    chain = [draw(st.sampled_from(start))]
    while chain[-1] > 1:
        chain.append(draw(st.sampled_from(
            [e for e in divisors(chain[-1]) if e < chain[-1]])))
    values = draw(st.lists(st.sampled_from(POOL), unique=True,
                           min_size=len(chain), max_size=len(chain)))
    values.sort(reverse=True)
    return chain, values


def coset_chain_membership(m, e, chain, values):
    """Member x gets the value of the first subgroup e + dZ containing it."""
    out = []
    for x in range(m):
        r = (x - e) % m
        out.append(next(v for d, v in zip(chain, values) if r % d == 0))
    return out


# -- structural invariants of derived groups ------------------------------------


@given(params=group_params(max_size=8, arities=(3, 4, 5)))
@settings(deadline=None)
def test_derived_groups_validate_and_match_oracle(params):
    m, n, b = params
    g = derived_group(m, n, b)
    ref = oracles.cyclic_derived(m, n, b)
    args = tuple(range(n)) if m >= n else tuple(x % m for x in range(n))
    assert g.evaluate(args) == ref(*args)
    assert all(g.skew(x) == oracles.skew_of(ref, m, n, x) for x in range(m))


@given(params=group_params(max_size=10, arities=(3, 4, 5)), data=st.data())
@settings(deadline=None)
def test_dornte_identities_hold_everywhere(params, data):
    m, n, b = params
    g = derived_group(m, n, b)
    x = data.draw(st.integers(0, m - 1))
    y = data.draw(st.integers(0, m - 1))
    xb = g.skew(x)
    for i in range(n - 1):
        block = [x] * (n - 1)
        block[i] = xb
        assert g.evaluate(tuple(block + [y])) == y
        assert g.evaluate(tuple([y] + block)) == y


@given(params=group_params(max_size=12, arities=(3,)))
@settings(deadline=None)
def test_ternary_skew_is_an_involution(params):
    g = derived_group(*params)
    assert all(g.skew(g.skew(x)) == x for x in range(g.size))


@given(params=group_params(max_size=8), data=st.data())
@settings(deadline=None)
def test_retract_identity_and_table(params, data):
    m, n, b = params
    g = derived_group(m, n, b)
    a = data.draw(st.integers(0, m - 1))
    bg = retract(g, a)
    assert bg.identity == g.skew(a)
    ref = oracles.retract_op(oracles.cyclic_derived(m, n, b), n, a)
    assert all(bg.mul(x, y) == ref(x, y)
               for x in range(m) for y in range(m))


@given(params=group_params(max_size=8), data=st.data())
@settings(deadline=None)
def test_decompose_compose_round_trip(params, data):
    m, n, b = params
    g = derived_group(m, n, b)
    a = data.draw(st.integers(0, m - 1))
    base, phi, bb = hosszu_decompose(g, a)
    assert hosszu_compose(base, list(phi), bb, n) == g.op


@pytest.mark.parametrize("m,n,b", [
    (4, 3, 0), (5, 3, 2), (6, 3, 1), (8, 3, 0), (4, 4, 1), (6, 4, 3),
])
def test_retracts_at_all_pivots_are_isomorphic(m, n, b):
    g = derived_group(m, n, b)
    base = retract(g, 0)
    for a in range(1, m):
        other = retract(g, a)
        phi = find_isomorphism(base, other)
        assert phi is not None
        assert sorted(phi) == list(range(m))
        assert all(phi[base.mul(x, y)] == other.mul(phi[x], phi[y])
                   for x in range(m) for y in range(m))


@pytest.mark.parametrize("m,n,b", [
    (4, 3, 0), (6, 3, 0), (3, 3, 1), (4, 4, 0), (8, 3, 4),
])
def test_enumerated_subgroups_validate_as_groups(m, n, b):
    g = derived_group(m, n, b)
    for sub in enumerate_subgroups(g):
        elems = sorted(sub)
        index = {x: i for i, x in enumerate(elems)}
        entries = [
            index[g.evaluate(args)]
            for args in itertools.product(elems, repeat=g.arity)
        ]
        validate_group(from_table(g.arity, len(elems), entries))


# -- checker agreement -------------------------------------------------------------


@given(gm=group_and_values(max_size=6))
@settings(deadline=None)
def test_three_routes_agree_with_the_definition(gm):
    g, mu = gm
    ref = oracles.cyclic_derived(g.size, g.arity, g.op.b)
    expected = oracles.fuzzy_nary_ok(ref, g.size, g.arity, list(mu.values))
    assert check_fuzzy_nary_subgroup(mu).passed is expected
    assert check_via_levels(mu).passed is expected
    assert check_thm28(mu).passed is expected


@given(gm=passing_fuzzy(arities=(3,)))
@settings(deadline=None)
def test_ternary_skew_preserves_memberships_exactly(gm):
    g, mu = gm
    assert all(mu(g.skew(x)) == mu(x) for x in range(g.size))


# -- chain constructions ------------------------------------------------------------


@given(gm=passing_fuzzy())
@settings(deadline=None)
def test_chain_built_sets_pass_and_round_trip(gm):
    g, mu = gm
    assert check_fuzzy_nary_subgroup(mu).passed
    fam = level_family(mu)
    rebuilt = from_nested(g, list(fam.thresholds), list(fam.levels))
    assert rebuilt.values == mu.values
    paired = from_chain(g, list(zip(fam.thresholds, fam.levels)))
    assert paired.values == mu.values


# -- transfer laws between arities ----------------------------------------------------


@given(gm=passing_fuzzy(), data=st.data())
@settings(deadline=None)
def test_transfer_down_at_a_maximal_pivot(gm, data):
    g, mu = gm
    top = [x for x in range(g.size) if mu(x) == mu.max_value()]
    a = data.draw(st.sampled_from(top))
    verdict = check_fuzzy_binary_subgroup(mu, group=retract(g, a))
    assert verdict.passed


@given(params=group_params(max_size=12), data=st.data())
@settings(deadline=None)
def test_transfer_up_from_a_maximal_pivot(params, data):
    m, n, b = params
    g = derived_group(m, n, b)
    a = data.draw(st.integers(0, m - 1))
    identity = (-((n - 2) * a + b)) % m
    gamma = math.gcd(m, ((n - 1) * a + b) % m)
    chain, values = data.draw(divisor_chain_values(
        m, [d for d in divisors(m) if gamma % d == 0]))
    mu = FuzzySet(g, coset_chain_membership(m, identity, chain, values))
    assert check_fuzzy_binary_subgroup(mu, group=retract(g, a)).passed
    assert mu(a) == mu.max_value()
    assert check_fuzzy_nary_subgroup(mu).passed


def test_ternary_retract_transfer_requires_maximal_pivot(ternary_z12, mu_odd_chain):
    """A fuzzy subgroup of a retract need not transfer back when the pivot
    does not attain the maximum, even in the ternary case.  Two witnesses:
    the minimal one and the classic chain over Z12."""
    g = derived_group(2, 3, 1)
    mu = FuzzySet(g, [Fraction(0), Fraction(1, 12)])
    assert check_fuzzy_binary_subgroup(mu, group=retract(g, 0)).passed
    assert mu(0) < mu.max_value()
    assert not check_fuzzy_nary_subgroup(mu).passed

    assert check_fuzzy_binary_subgroup(
        mu_odd_chain, group=retract(ternary_z12, 1)).passed
    assert mu_odd_chain(1) < mu_odd_chain.max_value()
    verdict = check_fuzzy_nary_subgroup(mu_odd_chain)
    assert not verdict.passed
    assert verdict.violated_axiom == "(ii)"


@given(params=group_params(max_size=12), data=st.data())
@settings(deadline=None)
def test_transfer_from_base_when_offset_is_maximal(params, data):
    m, n, b = params
    gamma = math.gcd(m, b)
    chain, values = data.draw(divisor_chain_values(
        m, [d for d in divisors(m) if gamma % d == 0]))
    vals = coset_chain_membership(m, 0, chain, values)
    base_mu = FuzzySet(BinaryGroup.cyclic(m), vals)
    assert check_fuzzy_binary_subgroup(base_mu).passed
    assert base_mu(b) == max(vals)
    g = derived_group(m, n, b)
    assert check_fuzzy_nary_subgroup(FuzzySet(g, vals)).passed


@given(params=group_params(max_size=12), data=st.data())
@settings(deadline=None)
def test_transfer_from_base_identity_offset(params, data):
    m, n, _ = params
    chain, values = data.draw(divisor_chain_values(m, divisors(m)))
    vals = coset_chain_membership(m, 0, chain, values)
    assert check_fuzzy_binary_subgroup(FuzzySet(BinaryGroup.cyclic(m), vals)).passed
    g = derived_group(m, n, 0)
    assert check_fuzzy_nary_subgroup(FuzzySet(g, vals)).passed


# -- shift, power, reparameterization ---------------------------------------------------


@given(gm=passing_fuzzy())
@settings(deadline=None)
def test_normalization_dominates_and_is_idempotent(gm):
    g, mu = gm
    plus = normalize_plus(mu)
    assert check_fuzzy_nary_subgroup(plus).passed
    assert plus.max_value() == 1
    assert all(plus(x) >= mu(x) for x in range(g.size))
    assert normalize_plus(plus).values == plus.values
    if mu.max_value() == 1:
        assert plus.values == mu.values


@given(gm=passing_fuzzy(), data=st.data())
@settings(deadline=None)
def test_memberships_dominating_a_normalization_attain_one(gm, data):
    g, nu = gm
    plus = normalize_plus(nu)
    mu = [data.draw(st.sampled_from([v for v in POOL if v >= plus(x)]))
          for x in range(g.size)]
    assert max(mu) == 1


@given(gm=passing_fuzzy(),
       t=st.sampled_from([Fraction(1, 2), Fraction(2, 3), Fraction(1),
                          Fraction(2), Fraction(3)]))
@settings(deadline=None)
def test_power_preserves_levels_and_top_set(gm, t):
    g, mu = gm
    nu = power(mu, t)
    assert check_fuzzy_nary_subgroup(nu).passed
    assert level_family(nu).levels == level_family(mu).levels
    assert mu_maximal_elements(nu) == mu_maximal_elements(mu)


@given(gm=passing_fuzzy(), data=st.data())
@settings(deadline=None)
def test_monotone_reparameterization_preserves_levels(gm, data):
    g, mu = gm
    attained = sorted(mu.distinct_values())
    targets = sorted(data.draw(st.lists(
        st.sampled_from(POOL), unique=True,
        min_size=len(attained), max_size=len(attained))))
    nu = compose_monotone(mu, dict(zip(attained, targets)))
    assert check_fuzzy_nary_subgroup(nu).passed
    assert level_family(nu).levels == level_family(mu).levels
