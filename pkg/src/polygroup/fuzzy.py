"""Fuzzy subsets of finite polyadic groups and their subgroup checks.

A fuzzy subset assigns each carrier element an exact membership in [0, 1]
(see :mod:`polygroup.membership`).  A fuzzy n-ary subgroup must satisfy

  (i)  mu(f(x_1, ..., x_n)) >= min_k mu(x_k)   for every argument tuple;
  (ii) mu(skew(x)) >= mu(x)                    for every x.

Three independent checkers are provided (the direct one, the level-set one,
and the solvability-style one); they agree on every input and serve as
cross-oracles for each other.  All sweeps compare value *ranks* (memberships
mapped to their index in the sorted distinct-value list), which preserves
every comparison exactly and keeps the inner loops in integer numpy.

Scan orders are fixed so failing checks return deterministic witnesses:
the skew axiom is scanned first (it is the O(m) scan), then the closure
axiom in row-major tuple order; the binary checker keeps the classical
axiom order (product rule first).  Witnesses are lexicographically smallest
per axiom.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    ChainViolation,
    HypothesisViolated,
    NotASubgroup,
    NotUnipotent,
)
from .groups import BinaryGroup
from .membership import ZERO, coerce, render
from .nary import (
    NaryGroup,
    _digits,
    enumerate_subgroups,
    special_elements,
    subgroup_witness,
)


class FuzzySet:
    """Memberships for every element of an attached group."""

    def __init__(self, group, values):
        values = tuple(coerce(v) for v in values)
        if len(values) != group.size:
            raise ValueError(
                f"need {group.size} memberships, got {len(values)}"
            )
        self.group = group
        self.values = values

    @classmethod
    def from_mapping(cls, group, mapping, default=None):
        values = []
        missing = []
        for x in range(group.size):
            if x in mapping:
                values.append(mapping[x])
            elif default is not None:
                values.append(default)
            else:
                missing.append(x)
        if missing:
            raise ValueError(f"no membership for elements {missing}")
        return cls(group, values)

    def __call__(self, x):
        return self.values[x]

    def rebind(self, group):
        """The same memberships attached to another group on the carrier."""
        if group.size != len(self.values):
            raise ValueError("carrier sizes differ")
        return FuzzySet(group, self.values)

    def distinct_values(self):
        """Attained memberships, largest first."""
        return tuple(sorted(set(self.values), reverse=True))

    def max_value(self):
        return max(self.values)

    def min_value(self):
        return min(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, FuzzySet)
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self):
        vals = ", ".join(render(v) for v in self.values)
        return f"FuzzySet([{vals}])"


@dataclass(frozen=True)
class FuzzyVerdict:
    passed: bool
    violated_axiom: Optional[str] = None  # "(i)", "(ii)", "binary-1", "binary-2"
    witness: Optional[tuple | int] = None
    threshold: Optional[object] = None    # set by the level-set route


@dataclass(frozen=True)
class LevelFamily:
    thresholds: tuple  # attained memberships, strictly decreasing
    levels: tuple      # matching level subsets, strictly increasing


def level_subset(mu, t):
    t = coerce(t)
    return frozenset(x for x, v in enumerate(mu.values) if v >= t)


def level_family(mu):
    thresholds = mu.distinct_values()
    levels = tuple(level_subset(mu, t) for t in thresholds)
    return LevelFamily(thresholds, levels)


def _rank_array(mu):
    order = sorted(set(mu.values))
    rank = {v: i for i, v in enumerate(order)}
    return np.asarray([rank[v] for v in mu.values], dtype=np.int64)


def _closure_witness(flat, m, n, ranks):
    """Smallest tuple with rank(f(tuple)) < min rank of its entries."""
    f_rank = ranks[flat]
    idx = np.arange(m ** n, dtype=np.int64)
    mins = None
    for k in range(n):
        r = ranks[(idx // (m ** (n - 1 - k))) % m]
        mins = r if mins is None else np.minimum(mins, r)
    bad = f_rank < mins
    if bad.any():
        return _digits(int(np.argmax(bad)), m, n)
    return None


def _require_nary(mu):
    if not isinstance(mu.group, NaryGroup):
        raise TypeError("membership set must be attached to an n-ary group")
    return mu.group


def check_fuzzy_nary_subgroup(mu):
    """Direct check of axioms (ii) then (i); smallest witness per axiom."""
    g = _require_nary(mu)
    for x in range(g.size):
        if mu(g.skew(x)) < mu(x):
            return FuzzyVerdict(False, "(ii)", x)
    witness = _closure_witness(g.table(), g.size, g.arity, _rank_array(mu))
    if witness is not None:
        return FuzzyVerdict(False, "(i)", witness)
    return FuzzyVerdict(True)


def check_via_levels(mu):
    """Level-set route: every attained-level subset must be an n-ary subgroup.

    Agrees with check_fuzzy_nary_subgroup on every input; the witness is the
    offending closure tuple or skew element of the highest failing level,
    with the level recorded in ``threshold``.
    """
    g = _require_nary(mu)
    fam = level_family(mu)
    for t, level in zip(fam.thresholds, fam.levels):
        bad = subgroup_witness(g, level)
        if bad is not None:
            kind, witness = bad
            axiom = "(i)" if kind == "f" else "(ii)"
            return FuzzyVerdict(False, axiom, witness, threshold=t)
    return FuzzyVerdict(True)


def check_thm28(mu):
    """Solvability-style route: closure axiom (i) plus, at every place i,
    mu(x_i) >= min of the other entries' memberships and mu(f(tuple)).

    Agrees with the other two checkers on every input.  A violation of the
    second condition is tagged "(ii)" with witness (place, tuple).
    """
    g = _require_nary(mu)
    m, n = g.size, g.arity
    ranks = _rank_array(mu)
    flat = g.table()
    witness = _closure_witness(flat, m, n, ranks)
    if witness is not None:
        return FuzzyVerdict(False, "(i)", witness)
    idx = np.arange(m ** n, dtype=np.int64)
    digit_ranks = [
        ranks[(idx // (m ** (n - 1 - k))) % m] for k in range(n)
    ]
    f_rank = ranks[flat]
    for place in range(1, n + 1):
        others = f_rank
        for k in range(n):
            if k != place - 1:
                others = np.minimum(others, digit_ranks[k])
        bad = digit_ranks[place - 1] < others
        if bad.any():
            hit = _digits(int(np.argmax(bad)), m, n)
            return FuzzyVerdict(False, "(ii)", (place, hit))
    return FuzzyVerdict(True)


def check_fuzzy_binary_subgroup(mu, group=None, mode="rosenfeld"):
    """Classical fuzzy subgroup check on a binary group.

    mode "rosenfeld": mu(x*y) >= min(mu(x), mu(y)) and mu(inv x) >= mu(x).
    mode "cor29": the three product conditions
        1) mu(x*y) >= min(mu(x), mu(y))
        2) mu(x)   >= min(mu(y), mu(x*y))
        3) mu(y)   >= min(mu(x), mu(x*y))
    Condition 1 violations are tagged "binary-1", the rest "binary-2".
    """
    if group is not None:
        mu = mu.rebind(group)
    bg = mu.group
    if not isinstance(bg, BinaryGroup):
        raise TypeError("binary check needs a BinaryGroup attachment")
    if mode not in ("rosenfeld", "cor29"):
        raise ValueError(f"unknown mode {mode!r}")
    m = bg.size
    for x in range(m):
        for y in range(m):
            if mu(bg.mul(x, y)) < min(mu(x), mu(y)):
                return FuzzyVerdict(False, "binary-1", (x, y))
    if mode == "rosenfeld":
        for x in range(m):
            if mu(bg.inv(x)) < mu(x):
                return FuzzyVerdict(False, "binary-2", x)
    else:
        for x in range(m):
            for y in range(m):
                if mu(x) < min(mu(y), mu(bg.mul(x, y))):
                    return FuzzyVerdict(False, "binary-2", (x, y))
        for x in range(m):
            for y in range(m):
                if mu(y) < min(mu(x), mu(bg.mul(x, y))):
                    return FuzzyVerdict(False, "binary-2", (x, y))
    return FuzzyVerdict(True)


# -- constructions ------------------------------------------------------------


def from_subgroup(g, subset, t, s):
    """Membership t on a subgroup, s off it (t > s); always passes."""
    t, s = coerce(t), coerce(s)
    if not s < t:
        raise ValueError("need s < t")
    bad = subgroup_witness(g, subset)
    if bad is not None:
        raise NotASubgroup(subset, bad)
    subset = set(subset)
    return FuzzySet(g, [t if x in subset else s for x in range(g.size)])


def from_chain(g, pairs):
    """mu(x) = max{ t : x in H_t } over an indexed family of subgroups.

    Hypotheses, checked in this order: every H is a subgroup; the family is
    order-reversing and order-reflecting (t1 > t2 iff H_1 strictly inside
    H_2, clause "ii"); the union covers the carrier (clause "i").
    """
    pairs = [(coerce(t), frozenset(int(x) for x in h)) for t, h in pairs]
    if not pairs:
        raise ValueError("need at least one (value, subgroup) pair")
    for k, (t, h) in enumerate(pairs):
        bad = subgroup_witness(g, h)
        if bad is not None:
            raise NotASubgroup(h, bad)
    for k1 in range(len(pairs)):
        for k2 in range(len(pairs)):
            if k1 == k2:
                continue
            t1, h1 = pairs[k1]
            t2, h2 = pairs[k2]
            if (t1 > t2) != (h1 < h2):
                raise HypothesisViolated(
                    "ii",
                    f"values {render(t1)},{render(t2)} vs sets "
                    f"{sorted(h1)},{sorted(h2)} break the chain rule",
                )
    union = frozenset().union(*(h for _, h in pairs))
    if union != frozenset(range(g.size)):
        raise HypothesisViolated(
            "i", f"union misses {sorted(set(range(g.size)) - union)}"
        )
    values = []
    for x in range(g.size):
        values.append(max(t for t, h in pairs if x in h))
    return FuzzySet(g, values)


def from_nested(g, thresholds, chain):
    """mu = t_k on H_k minus H_(k-1) for a strictly increasing subgroup
    chain ending at the whole carrier, with strictly decreasing t_k."""
    thresholds = [coerce(t) for t in thresholds]
    chain = [frozenset(int(x) for x in h) for h in chain]
    if len(thresholds) != len(chain):
        raise ValueError("need as many thresholds as chain members")
    if not chain:
        raise ValueError("need a nonempty chain")
    for a, b in zip(thresholds, thresholds[1:]):
        if not a > b:
            raise ChainViolation(
                f"thresholds not strictly decreasing at {render(a)},{render(b)}"
            )
    for h in chain:
        bad = subgroup_witness(g, h)
        if bad is not None:
            raise NotASubgroup(h, bad)
    for a, b in zip(chain, chain[1:]):
        if not a < b:
            raise ChainViolation(
                f"chain not strictly increasing at {sorted(a)},{sorted(b)}"
            )
    if chain[-1] != frozenset(range(g.size)):
        raise ChainViolation("chain must end at the whole carrier")
    values = [None] * g.size
    previous = frozenset()
    for t, h in zip(thresholds, chain):
        for x in h - previous:
            values[x] = t
        previous = h
    return FuzzySet(g, values)


# -- level comparisons ---------------------------------------------------------


def levels_equal(mu, s, t):
    """Whether the level subsets at s and t coincide.

    Computed two ways (set equality, and absence of memberships in the
    half-open band between s and t) and cross-asserted.
    """
    s, t = coerce(s), coerce(t)
    direct = level_subset(mu, s) == level_subset(mu, t)
    lo, hi = (s, t) if s <= t else (t, s)
    banded = not any(lo <= v < hi for v in mu.values)
    if direct != banded:
        raise AssertionError("level equality routes disagree")
    return direct


@dataclass(frozen=True)
class LevelComparison:
    families_equal: bool
    pairs: Optional[tuple]          # matched (threshold_mu, threshold_lam)
    value_map_consistent: Optional[bool]  # mu(x)=t_i forces lam(x)=s_i
    images_equal: bool
    sets_equal: bool                # mu == lam as fuzzy sets


def compare_level_families(mu, lam):
    """Compare the level-subgroup families of two fuzzy n-ary subgroups."""
    for name, f in (("first", mu), ("second", lam)):
        if not check_fuzzy_nary_subgroup(f).passed:
            raise HypothesisViolated(
                "fuzzy-subgroup", f"{name} argument fails the subgroup check"
            )
    if mu.group != lam.group:
        raise ValueError("fuzzy sets live on different groups")
    fam_mu = level_family(mu)
    fam_lam = level_family(lam)
    equal = fam_mu.levels == fam_lam.levels
    pairs = None
    consistent = None
    if equal:
        pairs = tuple(zip(fam_mu.thresholds, fam_lam.thresholds))
        consistent = True
        for x in range(mu.group.size):
            i = fam_mu.thresholds.index(mu(x))
            if lam(x) != fam_lam.thresholds[i]:
                consistent = False
    images_equal = set(mu.values) == set(lam.values)
    sets_equal = mu.values == lam.values
    if (equal and images_equal) != sets_equal:
        raise AssertionError("level-family characterization of equality failed")
    return LevelComparison(equal, pairs, consistent, images_equal, sets_equal)


# -- images under homomorphisms -----------------------------------------------


def image(hom, mu):
    """phi(mu): y gets the largest membership over its fiber, 0 if empty."""
    if mu.group != hom.source:
        raise ValueError("fuzzy set is not attached to the source group")
    values = []
    for y in range(hom.target.size):
        fiber = hom.fiber(y)
        values.append(max((mu(x) for x in fiber), default=ZERO))
    return FuzzySet(hom.target, values)


def preimage(hom, lam):
    """phi^(-1)(lam): x gets lam(phi(x))."""
    if lam.group != hom.target:
        raise ValueError("fuzzy set is not attached to the target group")
    return FuzzySet(hom.source, [lam(hom(x)) for x in range(hom.source.size)])


def sup_property(mu):
    """Whether every nonempty subset attains its supremum of memberships.

    On a finite carrier every nonempty value set has a maximum, so this is
    always True; it exists as the stated hypothesis of the level
    correspondence below.
    """
    return len(mu.values) > 0


@dataclass(frozen=True)
class LevelIdentityReport:
    t: object
    left: frozenset
    right: frozenset
    samples: tuple
    holds: bool


def check_image_level_identity(hom, mu, t):
    """Level subset of phi(mu) at t against the intersection of the images
    phi(mu_s) for s running through (0, t).

    Only finitely many s give distinct mu_s: each attained value below t,
    plus anything in the gap between the largest such value and t -- and in
    that top gap mu_s equals mu_t itself, so t stands in as the
    representative threshold.  The identity holds for every fuzzy set; both
    sides are computed independently and compared.
    """
    t = coerce(t)
    if not 0 < t <= 1:
        raise ValueError("t must lie in (0, 1]")
    left = level_subset(image(hom, mu), t)
    samples = [v for v in mu.distinct_values() if ZERO < v < t]
    samples.append(t)
    right = frozenset(range(hom.target.size))
    for s in samples:
        right &= frozenset(hom(x) for x in level_subset(mu, s))
    return LevelIdentityReport(t, left, right, tuple(samples), left == right)


@dataclass(frozen=True)
class LevelCorrespondenceReport:
    surjective: bool
    has_sup_property: bool
    image_levels: tuple
    mapped_levels: tuple
    coincide: bool
    missing: tuple  # image levels not arising as a mapped level


def image_level_correspondence(hom, mu):
    """Levels of phi(mu) against images of levels of mu.

    For a surjective hom (mu having the sup property, automatic here) the
    two collections coincide; for non-surjective maps they can differ, and
    the report exhibits the discrepancy.
    """
    img = image(hom, mu)
    image_levels = level_family(img).levels
    mapped = []
    for level in level_family(mu).levels:
        mapped.append(frozenset(hom(x) for x in level))
    mapped = tuple(mapped)
    missing = tuple(s for s in image_levels if s not in set(mapped))
    extra = tuple(s for s in mapped if s not in set(image_levels))
    coincide = not missing and not extra
    return LevelCorrespondenceReport(
        hom.is_surjective(),
        sup_property(mu),
        image_levels,
        mapped,
        coincide,
        missing,
    )


# -- unipotent analysis ---------------------------------------------------------


@dataclass(frozen=True)
class UnipotentReport:
    theta: int
    t0: object
    top_at_theta: bool        # mu(theta) is the unique maximum value
    levels_cover: bool        # the union of level subsets is the carrier
    levels_nested: bool       # the level family is a strict chain
    levels_complete: bool     # every subgroup meets its minimum inside a level
    all_pass: bool


def unipotent_analysis(mu):
    """Structure of the level family over a unipotent group (constant
    diagonal f(x,...,x) = theta).

    Requires mu to be a fuzzy n-ary subgroup of a unipotent group; reports
    four facts: the top value sits at theta, the levels cover the carrier,
    they form a strict chain, and every enumerated subgroup attains its
    minimum membership with every nonempty level subset a member of the
    family.
    """
    g = _require_nary(mu)
    theta = special_elements(g).unipotent
    if theta is None:
        raise NotUnipotent("the diagonal f(x,...,x) is not constant")
    if not check_fuzzy_nary_subgroup(mu).passed:
        raise HypothesisViolated(
            "fuzzy-subgroup", "membership set fails the subgroup check"
        )
    fam = level_family(mu)
    t0 = mu.max_value()
    top_at_theta = mu(theta) == t0
    union = frozenset().union(*fam.levels) if fam.levels else frozenset()
    levels_cover = union == frozenset(range(g.size))
    levels_nested = all(
        a < b for a, b in zip(fam.levels, fam.levels[1:])
    )
    attained = set(fam.levels)
    complete = True
    for sub in enumerate_subgroups(g):
        bottom = min(mu(x) for x in sub)
        if not any(mu(x) == bottom for x in sub):
            complete = False
    probes = list(fam.thresholds)
    for a, b in zip(fam.thresholds, fam.thresholds[1:]):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            probes.append((a + b) / 2)
    for alpha in probes:
        lvl = level_subset(mu, alpha)
        if lvl and lvl not in attained:
            complete = False
    all_pass = top_at_theta and levels_cover and levels_nested and complete
    return UnipotentReport(
        theta, t0, top_at_theta, levels_cover, levels_nested, complete, all_pass
    )
