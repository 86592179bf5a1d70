"""Why membership sets do not move freely between an n-ary group and its
retracts, and what the correct side condition is.  Run with python3."""

from fractions import Fraction as F

from polygroup import (
    BinaryGroup,
    FuzzySet,
    check_fuzzy_binary_subgroup,
    check_fuzzy_nary_subgroup,
    derive,
    retract,
    validate_group,
)

g = validate_group(derive(BinaryGroup.cyclic(4), 0, 3))

# A fuzzy ternary subgroup: f never drops below the smallest input
# membership, and the skew never drops below the element itself.
mu = FuzzySet(g, [F(1), F(3, 10), F(1, 2), F(3, 10)])
print("ternary check:", check_fuzzy_nary_subgroup(mu).passed)

# Freeze pivot 1 and ask the same question in the retract.  It fails:
# 2 * 2 = f(2, 1, 2) = 1 there, and mu(1) = 3/10 < 1/2 = mu(2).
r = retract(g, 1)
v = check_fuzzy_binary_subgroup(mu, group=r)
print("binary check on the pivot-1 retract:", v.passed,
      " axiom:", v.violated_axiom, " witness:", v.witness)

# The culprit is the pivot's membership.  When mu(a) is maximal the
# transfer works in both directions; pivot 0 has membership 1 here.
r0 = retract(g, 0)
print("binary check on the pivot-0 retract:",
      check_fuzzy_binary_subgroup(mu, group=r0).passed)

# The maximality hypothesis cannot be dropped, not even for ternary
# groups.  Smallest counterexample: f(x, y, z) = x + y + z + 1 on Z2.
h = validate_group(derive(BinaryGroup.cyclic(2), 1, 3))
nu = FuzzySet(h, [F(0), F(1, 12)])
rh = retract(h, 0)
print("counterexample carrier Z2, pivot 0:")
print("  binary check passes:",
      check_fuzzy_binary_subgroup(nu, group=rh).passed)
print("  pivot membership maximal:", nu(0) == nu.max_value())
w = check_fuzzy_nary_subgroup(nu)
print("  ternary check:", w.passed, " axiom:", w.violated_axiom,
      " witness:", w.witness)
print("  reason: skew(1) =", h.skew(1), "and nu(0) < nu(1)")
