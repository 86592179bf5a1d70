"""Reshaping membership values without touching the underlying chain:
top shift, powers, monotone reparameterization, and what normality means
for the level structure.  Run with python3."""

from fractions import Fraction as F

from polygroup import (
    BinaryGroup,
    FuzzySet,
    check_fuzzy_nary_subgroup,
    compose_monotone,
    derive,
    level_family,
    normality_report,
    normalize_plus,
    power,
    unipotent_analysis,
    validate_group,
)

g = validate_group(derive(BinaryGroup.cyclic(4), 0, 3))
mu = FuzzySet(g, [F(4, 5), F(3, 10), F(1, 2), F(3, 10)])
print("memberships:", list(mu.values))

# A membership set is normal when it attains 1.  The plus shift adds the
# same slack everywhere, so the level chain is untouched.
plus = normalize_plus(mu)
print("after the top shift:", list(plus.values))
print("shift is idempotent:", normalize_plus(plus).values == plus.values)
print("levels unchanged:",
      level_family(plus).levels == level_family(mu).levels)

# Powers and arbitrary strictly increasing value maps do the same: the
# verdict and the chain depend only on the ordering of the values.
sq = power(mu, 2)
print("squared memberships:", list(sq.values))
print("squared set still passes:", check_fuzzy_nary_subgroup(sq).passed)

halfway = compose_monotone(mu, {v: (v + 1) / 2 for v in mu.distinct_values()})
print("reparameterized:", list(halfway.values),
      " levels unchanged:",
      level_family(halfway).levels == level_family(mu).levels)

rep = normality_report(mu)
print("normal:", rep.is_normal, " top elements:", rep.mu_maximal,
      " top level subgroup:", sorted(rep.g_mu))

# Unipotent carriers (constant diagonal f(x, ..., x)) force a rigid level
# structure: the top value sits at the diagonal constant and the levels
# file into a complete chain.
u = validate_group(derive(BinaryGroup.cyclic(3), 1, 3))
nu = FuzzySet(u, [F(1, 2), F(1), F(1, 2)])
ua = unipotent_analysis(nu)
print("diagonal constant:", ua.theta,
      " top at the constant:", ua.top_at_theta,
      " chain complete:", ua.levels_complete,
      " all clauses:", ua.all_pass)
