"""A first walk through a ternary group: build, validate, skew, retract,
and the twisted-product decomposition.  Run with python3."""

from polygroup import (
    BinaryGroup,
    derive,
    from_table,
    hosszu_compose,
    hosszu_decompose,
    retract,
    special_elements,
    validate_group,
)

# The simplest source of n-ary groups: take a cyclic group and sum n
# elements, plus an optional constant.  f(x, y, z) = x + y + z on Z4.
g = validate_group(derive(BinaryGroup.cyclic(4), 0, 3))
print("carrier size:", g.size, " arity:", g.arity)
print("f(1, 2, 3) =", g.evaluate((1, 2, 3)))

# Every element has a skew: the unique solution of f(x, x, xbar) = x.
# It plays the role the inverse plays for ordinary groups.
print("skew table:", [g.skew(x) for x in range(g.size)])
print("idempotents and friends:", special_elements(g))

# Validation is exhaustive and refuses anything that is not a group.
bad = from_table(3, 2, [0, 1, 1, 0, 1, 0, 0, 0])
try:
    validate_group(bad)
except Exception as exc:
    print("rejected a non-group table:", exc)

# Fixing a pivot a turns the n-ary operation into an ordinary product
# x * y = f(x, a, y).  The result is a group on the same carrier whose
# identity is the skew of the pivot.
r = retract(g, 1)
print("retract at 1: identity", r.identity, " 2*2 =", r.mul(2, 2))

# Going the other way, every n-ary group is a twisted product over any of
# its retracts: an automorphism phi and a constant b rebuild f exactly.
base, phi, b = hosszu_decompose(g, 1)
print("decomposition at 1: phi =", list(phi), " b =", b)
rebuilt = hosszu_compose(base, list(phi), b, 3)
print("rebuilt operation matches:", rebuilt == g.op)
