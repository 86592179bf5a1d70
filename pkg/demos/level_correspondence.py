"""Membership sets are the same thing as chains of subgroups, and the
dictionary survives homomorphisms only up to surjectivity.  Run with
python3."""

from fractions import Fraction as F

from polygroup import (
    BinaryGroup,
    FuzzySet,
    Homomorphism,
    check_fuzzy_nary_subgroup,
    derive,
    enumerate_subgroups,
    from_nested,
    image,
    image_level_correspondence,
    level_family,
    validate_group,
)

g = validate_group(derive(BinaryGroup.cyclic(4), 0, 3))

# Cutting a membership set at each attained value yields a nested chain
# of subgroups, and every such chain arises this way.
mu = FuzzySet(g, [F(1), F(3, 10), F(1, 2), F(3, 10)])
fam = level_family(mu)
for t, level in zip(fam.thresholds, fam.levels):
    print(f"level at {t}: {sorted(level)}")

rebuilt = from_nested(g, fam.thresholds, fam.levels)
print("chain -> set -> chain round trip:", rebuilt.values == mu.values)

print("all subgroups:", [sorted(s) for s in enumerate_subgroups(g)])

# Push a membership set forward along a homomorphism: each target point
# takes the best membership over its preimage, zero off the image.
src = validate_group(derive(BinaryGroup.cyclic(2), 0, 3))
phi = Homomorphism(src, g, (0, 2))
nu = FuzzySet(src, [F(3, 10), F(1, 10)])
img = image(phi, nu)
print("image memberships:", [img(x) for x in range(4)])
print("image passes:", check_fuzzy_nary_subgroup(img).passed)

# For surjective maps the levels of the image are exactly the images of
# the levels.  This map is not surjective, and one level escapes: the
# whole carrier {0,1,2,3} is a level of the image, but no level of nu
# maps onto it.
report = image_level_correspondence(phi, nu)
print("surjective:", report.surjective,
      " levels coincide:", report.coincide)
print("levels with no preimage level:",
      [sorted(s) for s in report.missing])
