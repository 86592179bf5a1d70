"""Acceptance battery: twelve gate checks, one criterion line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.  Criterion 7
is expected to fail: its no-side-condition transfer clause is refuted by a
concrete counterexample (see the failure message and the project notes).
"""

import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

import oracles
from polygroup import (
    BinaryGroup,
    FuzzySet,
    Homomorphism,
    check_fuzzy_binary_subgroup,
    check_fuzzy_nary_subgroup,
    check_image_level_identity,
    check_thm28,
    check_via_levels,
    compose_monotone,
    enumerate_subgroups,
    find_homomorphisms,
    from_subgroup,
    hosszu_compose,
    hosszu_decompose,
    image,
    image_level_correspondence,
    level_family,
    level_subset,
    mu_maximal_elements,
    normalize_plus,
    power,
    retract,
    unipotent_analysis,
)
from conftest import derived_group, small_value_sets

TERNARY_CORPUS = [(m, b) for m in (2, 3, 4) for b in range(m)]

RATIONALS = tuple(sorted({
    F(p, q) for q in range(1, 13) for p in range(q + 1)
}))


def run_criterion(n, budget, body):
    """Time one gate check, print its criterion line, then surface failures."""
    start = time.perf_counter()
    failure = None
    try:
        body()
    except AssertionError as exc:
        failure = str(exc) or "assertion failed"
    elapsed = time.perf_counter() - start
    overtime = budget is not None and elapsed >= budget
    verdict = "PASS" if failure is None and not overtime else "FAIL"
    bound = f" < {budget}s" if budget is not None else ""
    print(f"criterion {n}: {verdict} ({elapsed:.2f}s{bound})")
    if failure is not None:
        raise AssertionError(f"criterion {n}: {failure}")
    if overtime:
        raise AssertionError(f"criterion {n}: runtime {elapsed:.2f}s over {budget}s")


def test_criterion_01_top_value_survives_the_skew():
    def body():
        g = derived_group(4, 4, 0)
        mu = FuzzySet(g, [F(1), F(1, 2), F(1, 2), F(1, 2)])
        assert check_fuzzy_nary_subgroup(mu).passed
        assert g.skew(2) == 0
        assert mu(g.skew(2)) == F(1)
        assert mu(2) == F(1, 2)
        assert mu(g.skew(2)) > mu(2)

    run_criterion(1, 1, body)


def test_criterion_02_retract_check_rejects_the_three_level_set():
    def body():
        g = derived_group(4, 3, 0)
        mu = FuzzySet(g, [F(1), F(3, 10), F(1, 2), F(3, 10)])
        assert check_fuzzy_nary_subgroup(mu).passed
        bg = retract(g, 1)
        verdict = check_fuzzy_binary_subgroup(mu, group=bg)
        assert not verdict.passed
        assert verdict.violated_axiom == "binary-1"
        assert verdict.witness == (0, 0)
        assert bg.mul(2, 2) == 1
        assert mu(bg.mul(2, 2)) == F(3, 10)
        assert min(mu(2), mu(2)) == F(1, 2)
        assert mu(bg.mul(2, 2)) < min(mu(2), mu(2))

    run_criterion(2, 1, body)


def test_criterion_03_chain_set_fails_the_skew_axiom():
    def body():
        g = derived_group(12, 3, 0)
        mu = FuzzySet.from_mapping(
            g,
            {11: F(1), 5: F(2, 3), 1: F(1, 3), 3: F(1, 3), 7: F(1, 3), 9: F(1, 3)},
            F(0),
        )
        assert check_fuzzy_binary_subgroup(mu, group=retract(g, 1)).passed
        verdict = check_fuzzy_nary_subgroup(mu)
        assert not verdict.passed
        assert verdict.violated_axiom == "(ii)"
        assert verdict.witness == 5
        assert g.skew(5) == 7
        assert mu(7) == F(1, 3)
        assert mu(5) == F(2, 3)
        assert mu(7) < mu(5)

    run_criterion(3, 1, body)


def test_criterion_04_image_levels_escape_nonsurjective_maps():
    def body():
        src = derived_group(2, 3, 0)
        dst = derived_group(4, 3, 0)
        phi = Homomorphism(src, dst, (0, 2))
        mu = FuzzySet(src, [F(3, 10), F(1, 10)])
        img = image(phi, mu)
        assert [img(x) for x in range(4)] == [F(3, 10), F(0), F(1, 10), F(0)]
        full = frozenset(range(4))
        assert list(level_family(img).levels) == [
            frozenset({0}), frozenset({0, 2}), full,
        ]
        mapped = {
            frozenset(phi(x) for x in level_subset(mu, t))
            for t in (F(3, 10), F(1, 10))
        }
        assert full not in mapped
        report = image_level_correspondence(phi, mu)
        assert not report.surjective
        assert not report.coincide
        assert report.missing == (full,)

    run_criterion(4, 1, body)


def test_criterion_05_three_checkers_agree():
    def body():
        cases = 0
        disagreements = 0
        for m, b in TERNARY_CORPUS:
            g = derived_group(m, 3, b)
            for vec in small_value_sets(m):
                mu = FuzzySet(g, vec)
                verdicts = {
                    check_fuzzy_nary_subgroup(mu).passed,
                    check_via_levels(mu).passed,
                    check_thm28(mu).passed,
                }
                cases += 1
                if len(verdicts) != 1:
                    disagreements += 1
        assert cases == 2925
        assert disagreements == 0

    run_criterion(5, 60, body)


def test_criterion_06_twisted_product_round_trip():
    def body():
        mismatches = 0
        for m in range(1, 13):
            for n in (3, 4):
                for b in range(m):
                    g = derived_group(m, n, b)
                    for a in range(m):
                        base, phi, bb = hosszu_decompose(g, a)
                        if hosszu_compose(base, list(phi), bb, n) != g.op:
                            mismatches += 1
        assert mismatches == 0

    run_criterion(6, 60, body)


def _coset_chain_values(rng, m, offset):
    """Random memberships constant on a nested chain of cosets offset+dZ."""
    chain = []
    d = rng.choice([x for x in range(1, m + 1) if m % x == 0])
    while True:
        chain.append(d)
        if d == 1:
            break
        d = rng.choice([x for x in range(1, d) if d % x == 0])
    values = sorted(rng.sample(RATIONALS, len(chain)), reverse=True)
    return [
        next(v for d, v in zip(chain, values) if ((x - offset) % m) % d == 0)
        for x in range(m)
    ]


def test_criterion_07_retract_transfer_suite():
    def body():
        rng = random.Random(20260814)
        laws = ("down-at-max-pivot", "up-at-max-pivot",
                "ternary-no-side-condition", "from-base-at-max-offset",
                "from-plain-base")
        hyp = dict.fromkeys(laws, 0)
        bad = dict.fromkeys(laws, 0)
        first = None
        cyclic = {m: BinaryGroup.cyclic(m) for m in (2, 3, 4)}
        retracts = {}
        for _ in range(10500):
            m, b = rng.choice(TERNARY_CORPUS)
            g = derived_group(m, 3, b)
            style = rng.randrange(3)
            if style == 0:
                vals = [rng.choice(RATIONALS) for _ in range(m)]
            elif style == 1:
                vals = _coset_chain_values(rng, m, (-(rng.randrange(m) + b)) % m)
            else:
                vals = _coset_chain_values(rng, m, 0)
            mu = FuzzySet(g, vals)
            a = rng.randrange(m)
            if (m, b, a) not in retracts:
                retracts[m, b, a] = retract(g, a)
            nary_ok = check_fuzzy_nary_subgroup(mu).passed
            binary_ok = check_fuzzy_binary_subgroup(
                mu, group=retracts[m, b, a]).passed
            pivot_max = mu(a) == mu.max_value()
            base_ok = check_fuzzy_binary_subgroup(
                mu.rebind(cyclic[m])).passed
            if nary_ok and pivot_max:
                hyp["down-at-max-pivot"] += 1
                bad["down-at-max-pivot"] += not binary_ok
            if binary_ok and pivot_max:
                hyp["up-at-max-pivot"] += 1
                bad["up-at-max-pivot"] += not nary_ok
            if binary_ok:
                hyp["ternary-no-side-condition"] += 1
                if not nary_ok:
                    bad["ternary-no-side-condition"] += 1
                    if first is None:
                        first = (m, b, a, vals)
            if base_ok and mu(b) == mu.max_value():
                hyp["from-base-at-max-offset"] += 1
                bad["from-base-at-max-offset"] += not nary_ok
            if base_ok and b == 0:
                hyp["from-plain-base"] += 1
                bad["from-plain-base"] += not nary_ok
        for law in laws:
            print(f"  {law}: {bad[law]} violations "
                  f"in {hyp[law]} hypothesis-satisfying cases")
        assert all(hyp[law] > 0 for law in laws), "a law was never exercised"
        violated = {law: bad[law] for law in laws if bad[law]}
        assert not violated, (
            f"hypothesis-satisfying violations {violated}; first "
            f"no-side-condition counterexample: carrier Z{first[0]}, "
            f"offset b={first[1]}, pivot a={first[2]}, memberships {first[3]} "
            "(a membership set can pass the retract check while its pivot "
            "misses the maximum, and then the skew axiom fails; the "
            "no-side-condition clause is refuted and this failure is the "
            "intended outcome)"
        )

    run_criterion(7, 60, body)


def test_criterion_08_images_and_level_identity():
    def body():
        corpus = [derived_group(m, 3, b) for m, b in TERNARY_CORPUS]
        passing = {
            id(g): [
                mu for vec in small_value_sets(g.size)
                if check_fuzzy_nary_subgroup(mu := FuzzySet(g, vec)).passed
            ]
            for g in corpus
        }
        image_failures = 0
        identity_failures = 0
        homs = 0
        for src in corpus:
            for dst in corpus:
                for phi in find_homomorphisms(src, dst):
                    homs += 1
                    for mu in passing[id(src)]:
                        if not check_fuzzy_nary_subgroup(image(phi, mu)).passed:
                            image_failures += 1
                        attained = sorted(set(mu.values))
                        probes = set(attained) | {
                            (s + t) / 2 for s, t in zip(attained, attained[1:])
                        }
                        for t in probes:
                            if not 0 < t <= 1:
                                continue
                            if not check_image_level_identity(phi, mu, t).holds:
                                identity_failures += 1
        assert homs > 0
        assert image_failures == 0
        assert identity_failures == 0

    run_criterion(8, 120, body)


def test_criterion_09_shift_power_reparameterization_suite():
    def body():
        groups = [
            derived_group(4, 4, 0), derived_group(4, 3, 0),
            derived_group(2, 3, 0), derived_group(3, 3, 1),
            derived_group(12, 3, 0),
        ]
        items = [
            FuzzySet(groups[0], [F(1), F(1, 2), F(1, 2), F(1, 2)]),
            FuzzySet(groups[1], [F(1), F(3, 10), F(1, 2), F(3, 10)]),
            FuzzySet(groups[2], [F(3, 10), F(1, 10)]),
            FuzzySet(groups[3], [F(1, 2), F(1), F(1, 2)]),
        ]
        for g in groups:
            for sub in enumerate_subgroups(g):
                items.append(from_subgroup(g, sub, F(1), F(0)))
            items.append(FuzzySet(g, [F(2, 3)] * g.size))
        for mu in items:
            size = mu.group.size
            assert check_fuzzy_nary_subgroup(mu).passed
            plus = normalize_plus(mu)
            assert plus.max_value() == F(1)
            assert all(plus(x) >= mu(x) for x in range(size))
            assert normalize_plus(plus).values == plus.values
            assert all(mu(x) == 0 for x in range(size) if plus(x) == 0)
            levels = level_family(mu).levels
            tops = mu_maximal_elements(mu)
            for t in (F(1, 2), F(1), F(2), F(3)):
                powered = power(mu, t)
                assert check_fuzzy_nary_subgroup(powered).passed
                assert mu_maximal_elements(powered) == tops
                assert level_family(powered).levels == levels
            attained = sorted(mu.distinct_values())
            nu = compose_monotone(mu, {v: (v + 1) / 2 for v in attained})
            assert check_fuzzy_nary_subgroup(nu).passed
            assert level_family(nu).levels == levels

    run_criterion(9, 30, body)


def test_criterion_10_subgroup_enumeration_oracle():
    def body():
        corpus = [(m, 3, b) for m, b in TERNARY_CORPUS]
        corpus += [(4, 4, 0), (3, 3, 1), (12, 3, 0)]
        for m, n, b in corpus:
            if m > 8:
                continue
            g = derived_group(m, n, b)
            ref = oracles.all_subgroups(oracles.cyclic_derived(m, n, b), m, n)
            assert set(enumerate_subgroups(g)) == set(ref)
        subs = enumerate_subgroups(derived_group(4, 3, 0))
        assert [set(s) for s in subs] == [
            {0}, {2}, {0, 2}, {1, 3}, {0, 1, 2, 3},
        ]
        assert set(subs[0]) & set(subs[1]) == set()

    run_criterion(10, 30, body)


def test_criterion_11_unipotent_clauses():
    def body():
        g = derived_group(3, 3, 1)
        checked = 0
        for vec in small_value_sets(3):
            mu = FuzzySet(g, vec)
            if not check_fuzzy_nary_subgroup(mu).passed:
                continue
            report = unipotent_analysis(mu)
            checked += 1
            assert report.theta == 1
            assert report.top_at_theta
            assert report.levels_cover
            assert report.levels_nested
            assert report.levels_complete
            assert report.all_pass
        assert checked > 0

    run_criterion(11, 10, body)


CORPUS_DOC = """\
group T { arity: 3; carrier: Z4; op: derived(b=0); }
group F { arity: 4; carrier: Z4; op: derived(b=0); }
group B { arity: 2; carrier: Z4; op: derived(b=0); }
group C12 { arity: 3; carrier: Z12; op: derived(b=0); }
group U { arity: 3; carrier: Z3; op: derived(b=1); }
group T2 { arity: 3; carrier: Z2; op: derived(b=0); }
fuzzy top on F { 0: 1; default: 1/2; }
fuzzy mu on T { 0: 1; 1: 3/10; 2: 1/2; 3: 3/10; }
fuzzy chain on C12 { 11: 1; 5: 2/3; 1: 1/3; 3: 1/3; 7: 1/3; 9: 1/3; default: 0; }
fuzzy nu on U { 1: 1; default: 1/2; }
fuzzy pt on T2 { 0: 3/10; 1: 1/10; }
hom dbl: T2 -> T [0, 2];
"""

CLI_BATTERY = [
    (["validate", "T"], 0),
    (["validate", "F", "--json"], 0),
    (["skew", "F", "2"], 0),
    (["skew", "T", "7"], 3),
    (["special", "U"], 0),
    (["retract", "T", "1"], 0),
    (["decompose", "C12", "1"], 0),
    (["compose", "B", "--phi", "0,1,2,3", "--b", "0", "--arity", "3"], 0),
    (["compose", "B", "--phi", "0,3,2,1", "--b", "1", "--arity", "3"], 1),
    (["subgroups", "T"], 0),
    (["check-fuzzy", "top"], 0),
    (["check-fuzzy", "mu"], 0),
    (["check-fuzzy", "mu", "--via", "levels"], 0),
    (["check-fuzzy", "chain"], 1),
    (["check-fuzzy", "chain", "--json"], 1),
    (["check-fuzzy", "missing"], 2),
    (["levels", "mu"], 0),
    (["construct", "from-subgroup", "T",
      "--elements", "1,3", "--inside", "3/4", "--outside", "1/4"], 0),
    (["construct", "from-chain", "T", "--level", "1:0",
      "--level", "1/2:0,2", "--level", "3/10:0,1,2,3"], 0),
    (["construct", "from-nested", "T", "--level", "1:0",
      "--level", "1/2:0,2", "--level", "3/10:0,1,2,3"], 0),
    (["image", "dbl", "pt"], 0),
    (["preimage", "dbl", "mu"], 0),
    (["normalize", "pt"], 0),
    (["power", "mu", "1/2"], 0),
    (["power", "mu", "0"], 2),
    (["report", "mu"], 0),
    (["report", "chain"], 3),
    (["unipotent", "nu"], 0),
    (["unipotent", "mu"], 3),
]


def test_criterion_12_cli_determinism(tmp_path):
    def body():
        doc = tmp_path / "corpus.pg"
        doc.write_text(CORPUS_DOC, encoding="utf-8")

        def sweep():
            outputs = []
            codes = set()
            for argv, expected in CLI_BATTERY:
                proc = subprocess.run(
                    [sys.executable, "-m", "polygroup", *argv,
                     "--spec", str(doc)],
                    capture_output=True,
                )
                assert proc.returncode == expected, (argv, proc.returncode)
                codes.add(proc.returncode)
                outputs.append(proc.stdout)
            return outputs, codes

        first, codes = sweep()
        second, _ = sweep()
        assert first == second
        assert codes == {0, 1, 2, 3}
        verbs = {argv[0] for argv, _ in CLI_BATTERY}
        assert verbs == {
            "validate", "skew", "special", "retract", "decompose", "compose",
            "subgroups", "check-fuzzy", "levels", "construct", "image",
            "preimage", "normalize", "power", "report", "unipotent",
        }

    run_criterion(12, None, body)
