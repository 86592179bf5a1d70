"""Command line interface.

Every command reads declarations from a document (``--spec FILE``) or from
flat table/fuzzy files, prints a deterministic report to stdout (``--json``
for machine-readable form), and exits with:

* 0  the computation succeeded / the checked property holds,
* 1  the checked property fails (a witness is included),
* 2  the document or an argument could not be parsed or resolved,
* 3  a semantic precondition failed (element out of range, hypothesis
     violation, carrier too large, and similar).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import tableio
from .errors import ParseError, PolyadicError
from .fuzzy import (
    FuzzySet,
    check_fuzzy_binary_subgroup,
    check_fuzzy_nary_subgroup,
    check_thm28,
    check_via_levels,
    from_chain,
    from_nested,
    from_subgroup,
    image,
    level_family,
    preimage,
    unipotent_analysis,
)
from .groups import BinaryGroup
from .membership import Fraction as _Fraction  # noqa: F401  (re-export guard)
from .membership import parse_membership, render
from .nary import (
    Homomorphism,
    derive,
    from_table,
    hosszu_compose,
    hosszu_decompose,
    retract,
    skew,
    special_elements,
    enumerate_subgroups,
    validate_group,
)
from .normal import normality_report, normalize_plus, power as fuzzy_power
from .speclang import FuzzyDecl, GroupDecl, HomDecl, parse_spec

_TABLE_LIMIT = 1 << 24


class _CliFailure(Exception):
    def __init__(self, code, payload, lines):
        self.code = code
        self.payload = payload
        self.lines = lines
        super().__init__(lines[0] if lines else "")


def _resolution(message):
    raise _CliFailure(2, {"status": "error", "error": message},
                      [f"error: {message}"])


def _semantic(message):
    raise _CliFailure(3, {"status": "error", "error": message},
                      [f"error: {message}"])


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return render(value)
    if isinstance(value, (frozenset, set)):
        return [_jsonable(v) for v in sorted(value)]
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return render(value)


def _fmt_elems(items):
    return ",".join(str(v) for v in sorted(items))


def _fmt_set(items):
    return "{" + _fmt_elems(items) + "}"


def _fmt_witness(w):
    if isinstance(w, tuple) and len(w) == 2 and isinstance(w[1], tuple):
        return f"place={w[0]} {_fmt_witness(w[1])}"
    if isinstance(w, tuple):
        return "(" + ",".join(str(v) for v in w) + ")"
    return str(w)


def _fuzzy_lines(mu):
    return [f"{x}: {render(mu(x))}" for x in range(mu.group.size)]


def _fuzzy_payload(mu):
    return {"values": [render(mu(x)) for x in range(mu.group.size)]}


def _bool(value):
    return "true" if value else "false"


class _Context:
    """Builds and caches algebra objects declared in one document."""

    def __init__(self, doc, full_check=False):
        self.doc = doc
        self.full_check = full_check
        self._ops = {}
        self._groups = {}
        self._binaries = {}

    def group_decl(self, name):
        decl = self.doc.groups.get(name)
        if decl is None:
            _resolution(f"unknown group {name!r}")
        return decl

    def fuzzy_decl(self, name):
        decl = self.doc.fuzzies.get(name)
        if decl is None:
            _resolution(f"unknown fuzzy set {name!r}")
        return decl

    def hom_decl(self, name):
        decl = self.doc.homs.get(name)
        if decl is None:
            _resolution(f"unknown homomorphism {name!r}")
        return decl

    def build_op(self, name):
        """The declared operation, with only construction-level checks."""
        if name in self._ops:
            return self._ops[name]
        decl = self.group_decl(name)
        if decl.op_kind == "derived":
            op = derive(BinaryGroup.cyclic(decl.size), decl.b, decl.arity)
        elif decl.op_kind == "table":
            op = from_table(decl.arity, decl.size, list(decl.entries))
        else:
            base_op = self.build_op(decl.base)
            base = BinaryGroup(base_op.nested())
            op = hosszu_compose(base, list(decl.phi), decl.b, decl.arity,
                                full_check=self.full_check)
        self._ops[name] = op
        return op

    def op(self, name):
        try:
            return self.build_op(name)
        except _CliFailure:
            raise
        except (PolyadicError, ValueError) as exc:
            _semantic(f"group {name!r} cannot be built: {exc}")

    def group(self, name):
        if name in self._groups:
            return self._groups[name]
        op = self.op(name)
        if op.carrier.size ** op.arity > _TABLE_LIMIT:
            _semantic(f"group {name!r} is too large for exhaustive validation")
        try:
            g = validate_group(op)
        except PolyadicError as exc:
            _semantic(f"group {name!r} fails validation: {exc}")
        self._groups[name] = g
        return g

    def binary(self, name):
        if name in self._binaries:
            return self._binaries[name]
        decl = self.group_decl(name)
        if decl.arity != 2:
            _semantic(f"group {name!r} has arity {decl.arity}, need 2")
        try:
            bg = BinaryGroup(self.op(name).nested())
        except _CliFailure:
            raise
        except (PolyadicError, ValueError) as exc:
            _semantic(f"group {name!r} fails validation: {exc}")
        self._binaries[name] = bg
        return bg

    def fuzzy(self, name, binary=False):
        decl = self.fuzzy_decl(name)
        grp = self.binary(decl.group) if binary else self.group(decl.group)
        mapping = {element: value for element, value in decl.entries}
        return FuzzySet.from_mapping(grp, mapping, decl.default)

    def hom(self, name):
        decl = self.hom_decl(name)
        source = self.group(decl.source)
        target = self.group(decl.target)
        try:
            return Homomorphism(source, target, list(decl.mapping))
        except (PolyadicError, ValueError) as exc:
            _semantic(f"homomorphism {name!r} is invalid: {exc}")


def _load_context(args):
    if not getattr(args, "spec", None):
        _resolution("no document given; pass --spec FILE")
    try:
        with open(args.spec, "r", encoding="utf-8") as fp:
            text = fp.read()
    except OSError as exc:
        _resolution(f"cannot read {args.spec}: {exc.strerror or exc}")
    try:
        doc = parse_spec(text)
    except ParseError as exc:
        _resolution(str(exc))
    return _Context(doc, full_check=getattr(args, "full_check", False))


def _check_element(x, size, what="element"):
    if not 0 <= x < size:
        _semantic(f"{what} {x} out of carrier range 0..{size - 1}")
    return x


def _parse_exponent(text):
    try:
        t = Fraction(text)
    except (ValueError, ZeroDivisionError):
        _resolution(f"bad exponent {text!r}")
    if t <= 0:
        _resolution("exponent must be positive")
    return t


def _parse_elements(text):
    try:
        return [int(w) for w in text.split(",") if w != ""]
    except ValueError:
        _resolution(f"bad element list {text!r}")


def _parse_level_arg(text):
    head, sep, tail = text.partition(":")
    if not sep:
        _resolution(f"bad level {text!r}; expected VALUE:e1,e2,...")
    try:
        value = parse_membership(head)
    except (ValueError, TypeError, ZeroDivisionError):
        _resolution(f"bad membership value {head!r}")
    return value, _parse_elements(tail)


def _write_table(op, path):
    if op.carrier.size ** op.arity > _TABLE_LIMIT:
        _semantic("table too large to materialize")
    tableio.write_table_file(path, op)


# -- command handlers ----------------------------------------------------------


def _cmd_validate(args):
    if args.table_file:
        if args.target:
            _resolution("give a group name or --table-file, not both")
        try:
            size, arity, entries = tableio.read_table_file(args.table_file)
        except ParseError as exc:
            _resolution(f"{args.table_file}: {exc}")
        except OSError as exc:
            _resolution(f"cannot read {args.table_file}: {exc.strerror or exc}")
        build = lambda: from_table(arity, size, entries)
        kind = "table"
    else:
        if not args.target:
            _resolution("give a group name or --table-file")
        ctx = _load_context(args)
        decl = ctx.group_decl(args.target)
        build = lambda: ctx.build_op(args.target)
        kind = decl.op_kind
    try:
        op = build()
        if op.carrier.size ** op.arity > _TABLE_LIMIT:
            _semantic("carrier too large for exhaustive validation")
        g = validate_group(op)
    except _CliFailure:
        raise
    except (PolyadicError, ValueError) as exc:
        payload = {"status": "fail", "reason": str(exc)}
        raise _CliFailure(1, payload, ["FAIL", f"reason: {exc}"])
    lines = [
        "PASS",
        f"arity: {g.arity}",
        f"size: {g.size}",
        f"kind: {kind}",
    ]
    payload = {"status": "pass", "arity": g.arity, "size": g.size, "kind": kind}
    if op.certification is not None:
        lines.append(f"certification: {op.certification}")
        payload["certification"] = op.certification
    skews = [g.skew(x) for x in range(g.size)]
    lines.append(f"skew: {','.join(str(v) for v in skews)}")
    payload["skew"] = skews
    if args.table_out:
        _write_table(op, args.table_out)
        lines.append(f"wrote: {args.table_out}")
        payload["wrote"] = args.table_out
    return payload, lines


def _cmd_skew(args):
    ctx = _load_context(args)
    g = ctx.group(args.group)
    _check_element(args.x, g.size)
    if args.k < 1:
        _resolution("k must be at least 1")
    value = skew(g, args.x, args.k)
    return {"skew": value}, [f"skew: {value}"]


def _cmd_special(args):
    ctx = _load_context(args)
    report = special_elements(ctx.group(args.group))
    lines = [
        f"neutral: {_fmt_elems(report.neutral) or '(none)'}",
        f"idempotent: {_fmt_elems(report.idempotent) or '(none)'}",
        f"unipotent: {report.unipotent if report.unipotent is not None else '(none)'}",
    ]
    payload = {
        "neutral": sorted(report.neutral),
        "idempotent": sorted(report.idempotent),
        "unipotent": report.unipotent,
    }
    return payload, lines


def _table_lines(table):
    return [" ".join(str(v) for v in row) for row in table.tolist()]


def _cmd_retract(args):
    ctx = _load_context(args)
    g = ctx.group(args.group)
    _check_element(args.a, g.size, "pivot")
    bg = retract(g, args.a)
    lines = [f"identity: {bg.identity}", "table:"] + _table_lines(bg.table)
    payload = {"identity": bg.identity, "table": bg.table.tolist()}
    return payload, lines


def _cmd_decompose(args):
    ctx = _load_context(args)
    g = ctx.group(args.group)
    _check_element(args.a, g.size, "pivot")
    try:
        base, phi, b = hosszu_decompose(g, args.a)
    except PolyadicError as exc:
        _semantic(str(exc))
    lines = [
        f"phi: {','.join(str(v) for v in phi)}",
        f"b: {b}",
        f"base identity: {base.identity}",
        "base table:",
    ] + _table_lines(base.table)
    payload = {
        "phi": list(phi),
        "b": b,
        "base_identity": base.identity,
        "base_table": base.table.tolist(),
    }
    return payload, lines


def _cmd_compose(args):
    ctx = _load_context(args)
    base = ctx.binary(args.base)
    phi = _parse_elements(args.phi)
    if args.arity < 2:
        _resolution("arity must be at least 2")
    if len(phi) != base.size or any(not 0 <= v < base.size for v in phi):
        _semantic("phi must map the carrier into itself")
    _check_element(args.b, base.size, "b")
    try:
        op = hosszu_compose(base, phi, args.b, args.arity,
                            full_check=args.full_check)
    except PolyadicError as exc:
        payload = {"status": "fail", "reason": str(exc)}
        raise _CliFailure(1, payload, ["FAIL", f"reason: {exc}"])
    lines = [
        "PASS",
        f"arity: {op.arity}",
        f"size: {op.carrier.size}",
        f"certification: {op.certification}",
    ]
    payload = {
        "status": "pass",
        "arity": op.arity,
        "size": op.carrier.size,
        "certification": op.certification,
    }
    if args.table_out:
        _write_table(op, args.table_out)
        lines.append(f"wrote: {args.table_out}")
        payload["wrote"] = args.table_out
    return payload, lines


def _cmd_subgroups(args):
    ctx = _load_context(args)
    g = ctx.group(args.group)
    try:
        subs = enumerate_subgroups(g)
    except PolyadicError as exc:
        _semantic(str(exc))
    if subs:
        lines = [f"count: {len(subs)}"]
        lines += [_fmt_set(s) for s in subs]
    else:
        lines = ["subgroups: (none)"]
    payload = {"count": len(subs), "subgroups": [sorted(s) for s in subs]}
    return payload, lines


def _make_fuzzy(args, ctx, binary=False):
    """Fuzzy set from the positional name or from --fuzzy-file/--on."""
    if args.fuzzy_file:
        if args.fuzzy:
            _resolution("give a fuzzy set name or --fuzzy-file, not both")
        if not args.on:
            _resolution("--fuzzy-file needs --on GROUP")
        try:
            entries, default = tableio.read_fuzzy_file(args.fuzzy_file)
        except ParseError as exc:
            _resolution(f"{args.fuzzy_file}: {exc}")
        except OSError as exc:
            _resolution(f"cannot read {args.fuzzy_file}: {exc.strerror or exc}")
        grp = ctx.binary(args.on) if binary else ctx.group(args.on)
        for element in entries:
            _check_element(element, grp.size)
        try:
            return FuzzySet.from_mapping(grp, entries, default)
        except ValueError as exc:
            _semantic(str(exc))
    if not args.fuzzy:
        _resolution("give a fuzzy set name or --fuzzy-file")
    return ctx.fuzzy(args.fuzzy, binary=binary)


def _group_arity_of_fuzzy(args, ctx):
    if args.fuzzy_file:
        name = args.on
        if not name:
            _resolution("--fuzzy-file needs --on GROUP")
    else:
        name = ctx.fuzzy_decl(args.fuzzy).group
    return ctx.group_decl(name).arity


def _cmd_check_fuzzy(args):
    ctx = _load_context(args)
    arity = _group_arity_of_fuzzy(args, ctx)
    if arity == 2:
        if args.via is not None:
            _semantic("--via applies to groups of arity at least 3")
        mu = _make_fuzzy(args, ctx, binary=True)
        verdict = check_fuzzy_binary_subgroup(mu, mode=args.mode or "rosenfeld")
    else:
        if args.mode is not None:
            _semantic("--mode applies to binary groups")
        mu = _make_fuzzy(args, ctx)
        checker = {
            None: check_fuzzy_nary_subgroup,
            "direct": check_fuzzy_nary_subgroup,
            "levels": check_via_levels,
            "solvability": check_thm28,
        }[args.via]
        verdict = checker(mu)
    if verdict.passed:
        return {"status": "pass"}, ["PASS"]
    lines = ["FAIL", f"axiom: {verdict.violated_axiom}",
             f"witness: {_fmt_witness(verdict.witness)}"]
    payload = {
        "status": "fail",
        "axiom": verdict.violated_axiom,
        "witness": _jsonable(verdict.witness),
    }
    if verdict.threshold is not None:
        lines.append(f"threshold: {render(verdict.threshold)}")
        payload["threshold"] = render(verdict.threshold)
    raise _CliFailure(1, payload, lines)


def _cmd_levels(args):
    ctx = _load_context(args)
    mu = _make_fuzzy(args, ctx)
    fam = level_family(mu)
    lines = [
        f"t={render(t)} {_fmt_set(level)}"
        for t, level in zip(fam.thresholds, fam.levels)
    ]
    payload = {
        "levels": [
            {"t": render(t), "elements": sorted(level)}
            for t, level in zip(fam.thresholds, fam.levels)
        ]
    }
    return payload, lines


def _finish_fuzzy(args, mu):
    lines = _fuzzy_lines(mu)
    payload = _fuzzy_payload(mu)
    out = getattr(args, "fuzzy_out", None)
    if out:
        try:
            tableio.write_fuzzy_file(out, mu)
        except TypeError as exc:
            _semantic(str(exc))
        lines.append(f"wrote: {out}")
        payload["wrote"] = out
    return payload, lines


def _cmd_construct(args):
    ctx = _load_context(args)
    g = ctx.group(args.group)
    try:
        if args.kind == "from-subgroup":
            if args.elements is None or args.inside is None or args.outside is None:
                _resolution("from-subgroup needs --elements, --inside, --outside")
            subset = _parse_elements(args.elements)
            for x in subset:
                _check_element(x, g.size)
            inside = parse_membership(args.inside)
            outside = parse_membership(args.outside)
            mu = from_subgroup(g, subset, inside, outside)
        else:
            if not args.level:
                _resolution(f"{args.kind} needs at least one --level VALUE:e1,e2,...")
            pairs = []
            for text in args.level:
                value, elems = _parse_level_arg(text)
                for x in elems:
                    _check_element(x, g.size)
                pairs.append((value, frozenset(elems)))
            if args.kind == "from-chain":
                mu = from_chain(g, pairs)
            else:
                thresholds = [value for value, _ in pairs]
                chain = [elems for _, elems in pairs]
                mu = from_nested(g, thresholds, chain)
    except _CliFailure:
        raise
    except (PolyadicError, ValueError, TypeError) as exc:
        _semantic(str(exc))
    return _finish_fuzzy(args, mu)


def _cmd_image(args):
    ctx = _load_context(args)
    hom = ctx.hom(args.hom)
    decl = ctx.fuzzy_decl(args.fuzzy)
    if decl.group != ctx.hom_decl(args.hom).source:
        _semantic(f"fuzzy set {args.fuzzy!r} is not on the source group")
    mu = ctx.fuzzy(args.fuzzy)
    return _finish_fuzzy(args, image(hom, mu))


def _cmd_preimage(args):
    ctx = _load_context(args)
    hom = ctx.hom(args.hom)
    decl = ctx.fuzzy_decl(args.fuzzy)
    if decl.group != ctx.hom_decl(args.hom).target:
        _semantic(f"fuzzy set {args.fuzzy!r} is not on the target group")
    lam = ctx.fuzzy(args.fuzzy)
    return _finish_fuzzy(args, preimage(hom, lam))


def _cmd_normalize(args):
    ctx = _load_context(args)
    mu = ctx.fuzzy(args.fuzzy)
    try:
        nu = normalize_plus(mu)
    except (PolyadicError, TypeError) as exc:
        _semantic(str(exc))
    return _finish_fuzzy(args, nu)


def _cmd_power(args):
    ctx = _load_context(args)
    mu = ctx.fuzzy(args.fuzzy)
    t = _parse_exponent(args.t)
    try:
        nu = fuzzy_power(mu, t)
    except (PolyadicError, TypeError, ValueError) as exc:
        _semantic(str(exc))
    return _finish_fuzzy(args, nu)


def _cmd_report(args):
    ctx = _load_context(args)
    mu = ctx.fuzzy(args.fuzzy)
    try:
        rep = normality_report(mu)
    except PolyadicError as exc:
        _semantic(str(exc))
    lines = [
        f"mu_maximal: {_fmt_elems(rep.mu_maximal)}",
        f"is_normal: {_bool(rep.is_normal)}",
        f"g_mu: {_fmt_set(rep.g_mu)}",
        f"g_mu_is_maximal_subgroup: {_bool(rep.g_mu_is_maximal_subgroup)}",
        f"is_two_valued: {_bool(rep.is_two_valued)}",
        f"is_completely_normal: {_bool(rep.is_completely_normal)}",
    ]
    payload = {
        "mu_maximal": sorted(rep.mu_maximal),
        "is_normal": rep.is_normal,
        "g_mu": sorted(rep.g_mu),
        "g_mu_is_maximal_subgroup": rep.g_mu_is_maximal_subgroup,
        "is_two_valued": rep.is_two_valued,
        "is_completely_normal": rep.is_completely_normal,
    }
    return payload, lines


def _cmd_unipotent(args):
    ctx = _load_context(args)
    mu = ctx.fuzzy(args.fuzzy)
    try:
        rep = unipotent_analysis(mu)
    except PolyadicError as exc:
        _semantic(str(exc))
    lines = [
        f"theta: {rep.theta}",
        f"t0: {render(rep.t0)}",
        f"top_at_theta: {_bool(rep.top_at_theta)}",
        f"levels_cover: {_bool(rep.levels_cover)}",
        f"levels_nested: {_bool(rep.levels_nested)}",
        f"levels_complete: {_bool(rep.levels_complete)}",
        f"all_pass: {_bool(rep.all_pass)}",
    ]
    payload = {
        "theta": rep.theta,
        "t0": render(rep.t0),
        "top_at_theta": rep.top_at_theta,
        "levels_cover": rep.levels_cover,
        "levels_nested": rep.levels_nested,
        "levels_complete": rep.levels_complete,
        "all_pass": rep.all_pass,
    }
    return payload, lines


# -- wiring --------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="polygroup",
        description="Finite n-ary groups and fuzzy n-ary subgroups.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", metavar="FILE",
                        help="document with group/fuzzy/hom declarations")
    common.add_argument("--json", action="store_true",
                        help="print a JSON report instead of text")
    common.add_argument("--full-check", action="store_true",
                        help="force exhaustive certification of twisted products")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", parents=[common],
                       help="check that a declared operation is an n-ary group")
    p.add_argument("target", nargs="?", help="group name in the document")
    p.add_argument("--table-file", metavar="FILE",
                   help="validate a flat table file instead")
    p.add_argument("--table-out", metavar="FILE",
                   help="write the validated table")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("skew", parents=[common],
                       help="the skew element of x (iterated with --k)")
    p.add_argument("group")
    p.add_argument("x", type=int)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(handler=_cmd_skew)

    p = sub.add_parser("special", parents=[common],
                       help="neutral, idempotent, and unipotent elements")
    p.add_argument("group")
    p.set_defaults(handler=_cmd_special)

    p = sub.add_parser("retract", parents=[common],
                       help="the binary retract at a pivot element")
    p.add_argument("group")
    p.add_argument("a", type=int)
    p.set_defaults(handler=_cmd_retract)

    p = sub.add_parser("decompose", parents=[common],
                       help="twisted-product form over the retract at a pivot")
    p.add_argument("group")
    p.add_argument("a", type=int)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("compose", parents=[common],
                       help="build an n-ary group from a binary group, "
                            "an automorphism, and a twist element")
    p.add_argument("base", help="arity-2 group name in the document")
    p.add_argument("--phi", required=True, metavar="LIST",
                   help="automorphism as comma separated images")
    p.add_argument("--b", required=True, type=int)
    p.add_argument("--arity", required=True, type=int)
    p.add_argument("--table-out", metavar="FILE")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("subgroups", parents=[common],
                       help="enumerate all n-ary subgroups")
    p.add_argument("group")
    p.set_defaults(handler=_cmd_subgroups)

    fuzzy_src = argparse.ArgumentParser(add_help=False)
    fuzzy_src.add_argument("fuzzy", nargs="?", help="fuzzy set name")
    fuzzy_src.add_argument("--fuzzy-file", metavar="FILE",
                           help="read memberships from a flat file")
    fuzzy_src.add_argument("--on", metavar="GROUP",
                           help="group to attach a --fuzzy-file to")

    p = sub.add_parser("check-fuzzy", parents=[common, fuzzy_src],
                       help="check the fuzzy n-ary subgroup conditions")
    p.add_argument("--mode", choices=["rosenfeld", "cor29"],
                   help="condition set for binary groups")
    p.add_argument("--via", choices=["direct", "levels", "solvability"],
                   help="checking route for n-ary groups")
    p.set_defaults(handler=_cmd_check_fuzzy)

    p = sub.add_parser("levels", parents=[common, fuzzy_src],
                       help="the family of level subsets")
    p.set_defaults(handler=_cmd_levels)

    p = sub.add_parser("construct", parents=[common],
                       help="build a fuzzy n-ary subgroup from subgroups")
    p.add_argument("kind", choices=["from-subgroup", "from-chain", "from-nested"])
    p.add_argument("group")
    p.add_argument("--elements", metavar="LIST",
                   help="subgroup elements (from-subgroup)")
    p.add_argument("--inside", metavar="VALUE",
                   help="membership on the subgroup (from-subgroup)")
    p.add_argument("--outside", metavar="VALUE",
                   help="membership off the subgroup (from-subgroup)")
    p.add_argument("--level", action="append", metavar="VALUE:LIST",
                   help="threshold and elements, repeatable")
    p.add_argument("--fuzzy-out", metavar="FILE")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("image", parents=[common],
                       help="image of a fuzzy set under a homomorphism")
    p.add_argument("hom")
    p.add_argument("fuzzy")
    p.add_argument("--fuzzy-out", metavar="FILE")
    p.set_defaults(handler=_cmd_image)

    p = sub.add_parser("preimage", parents=[common],
                       help="preimage of a fuzzy set under a homomorphism")
    p.add_argument("hom")
    p.add_argument("fuzzy")
    p.add_argument("--fuzzy-out", metavar="FILE")
    p.set_defaults(handler=_cmd_preimage)

    p = sub.add_parser("normalize", parents=[common],
                       help="shift memberships so the maximum becomes 1")
    p.add_argument("fuzzy")
    p.add_argument("--fuzzy-out", metavar="FILE")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("power", parents=[common],
                       help="raise memberships to a positive rational power")
    p.add_argument("fuzzy")
    p.add_argument("t", help="exponent, e.g. 2 or 1/2")
    p.add_argument("--fuzzy-out", metavar="FILE")
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("report", parents=[common],
                       help="normality facts about a fuzzy n-ary subgroup")
    p.add_argument("fuzzy")
    p.set_defaults(handler=_cmd_report)

    p = sub.add_parser("unipotent", parents=[common],
                       help="level structure over a unipotent group")
    p.add_argument("fuzzy")
    p.set_defaults(handler=_cmd_unipotent)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = args.handler(args)
        code = 0
        if "status" not in payload:
            payload = dict(payload, status="pass")
    except _CliFailure as fail:
        payload, lines, code = fail.payload, fail.lines, fail.code
    if args.json:
        print(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
