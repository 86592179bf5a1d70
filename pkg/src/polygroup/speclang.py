"""The polygroup document language.

A document declares groups, fuzzy sets, and homomorphisms:

    group T { arity: 3; carrier: Z4; op: derived(b=0); }
    group B { arity: 2; carrier: Z4; op: table [0,1,2,3, 1,2,3,0, 2,3,0,1, 3,0,1,2]; }
    group H { arity: 3; carrier: Z4; op: hosszu(base=B, phi=[0,1,2,3], b=0); }
    fuzzy mu on T { 0: 1; 2: 0.5; default: 0.3; }
    hom h: T -> T [0, 2, 0, 2];

Carriers are ``Z<m>`` (0..m-1 with the additive cyclic structure available
to ``derived``) or ``table <m>`` (a bare m-element carrier).  Memberships
are integers, fractions ``p/q``, or decimal literals, all read exactly.
``#`` starts a comment.  Declaration order carries no meaning; forward
references are allowed.

Parsing performs every statically checkable validation (name resolution,
ranges, totality of fuzzy sets, permutation-ness of phi, declared-arity
agreement of homomorphisms) and raises :class:`ParseError` with a
line:column position on the first failure.  Group axioms themselves are
checked later, when a command builds the declared operation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<decimal>\d+\.\d+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<arrow>->)
  | (?P<punct>[{}()\[\]:;,=/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "decimal", "name", "punct" (incl. "->"), "eof"
    text: str
    line: int
    column: int


def _lex(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            if kind in ("arrow", "punct"):
                tokens.append(Token("punct", chunk, line, col))
            else:
                tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class GroupDecl:
    name: str
    arity: int
    carrier_kind: str  # "Z" or "table"
    size: int
    op_kind: str       # "derived", "table", "hosszu"
    b: Optional[int] = None
    entries: Optional[tuple] = None
    base: Optional[str] = None
    phi: Optional[tuple] = None


@dataclass(frozen=True)
class FuzzyDecl:
    name: str
    group: str
    entries: tuple  # ((element, Fraction), ...) in declaration order
    default: Optional[Fraction] = None


@dataclass(frozen=True)
class HomDecl:
    name: str
    source: str
    target: str
    mapping: tuple


@dataclass(frozen=True)
class SpecDocument:
    decls: tuple

    @property
    def groups(self):
        return {d.name: d for d in self.decls if isinstance(d, GroupDecl)}

    @property
    def fuzzies(self):
        return {d.name: d for d in self.decls if isinstance(d, FuzzyDecl)}

    @property
    def homs(self):
        return {d.name: d for d in self.decls if isinstance(d, HomDecl)}


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def expect_punct(self, text):
        tok = self.advance()
        if tok.kind != "punct" or tok.text != text:
            self.fail(f"expected {text!r}, found {tok.text!r}", tok)
        return tok

    def expect_name(self, what="a name"):
        tok = self.advance()
        if tok.kind != "name":
            self.fail(f"expected {what}, found {tok.text!r}", tok)
        return tok

    def expect_keyword(self, word):
        tok = self.advance()
        if tok.kind != "name" or tok.text != word:
            self.fail(f"expected {word!r}, found {tok.text!r}", tok)
        return tok

    def expect_int(self, what="an integer"):
        tok = self.advance()
        if tok.kind != "int":
            self.fail(f"expected {what}, found {tok.text!r}", tok)
        return int(tok.text)

    def parse_membership(self):
        tok = self.advance()
        if tok.kind == "decimal":
            value = Fraction(tok.text)
        elif tok.kind == "int":
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.text == "/":
                self.advance()
                den = self.expect_int("a denominator")
                if den == 0:
                    self.fail("zero denominator", tok)
                value = Fraction(int(tok.text), den)
        else:
            self.fail(f"expected a membership value, found {tok.text!r}", tok)
        if value < 0 or value > 1:
            self.fail(f"membership {value} out of [0, 1]", tok)
        return value

    def parse_int_list(self):
        self.expect_punct("[")
        items = []
        if not (self.peek().kind == "punct" and self.peek().text == "]"):
            items.append(self.expect_int())
            while self.peek().kind == "punct" and self.peek().text == ",":
                self.advance()
                items.append(self.expect_int())
        self.expect_punct("]")
        return tuple(items)

    def parse_document(self):
        decls = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind != "name":
                self.fail(f"expected a declaration, found {tok.text!r}")
            if tok.text == "group":
                decls.append(self.parse_group())
            elif tok.text == "fuzzy":
                decls.append(self.parse_fuzzy())
            elif tok.text == "hom":
                decls.append(self.parse_hom())
            else:
                self.fail(f"unknown declaration {tok.text!r}")
        return decls

    def parse_group(self):
        self.expect_keyword("group")
        name_tok = self.expect_name("a group name")
        self.expect_punct("{")
        arity = carrier = size = None
        op_kind = b = entries = base = phi = None
        seen = set()
        while not (self.peek().kind == "punct" and self.peek().text == "}"):
            key = self.expect_name("a field name")
            if key.text in seen:
                self.fail(f"duplicate field {key.text!r}", key)
            seen.add(key.text)
            self.expect_punct(":")
            if key.text == "arity":
                arity = self.expect_int("an arity")
                if arity < 2:
                    self.fail("arity must be at least 2", key)
            elif key.text == "carrier":
                tok = self.advance()
                if tok.kind == "name" and re.fullmatch(r"Z\d+", tok.text):
                    carrier, size = "Z", int(tok.text[1:])
                elif tok.kind == "name" and tok.text == "table":
                    carrier, size = "table", self.expect_int("a carrier size")
                else:
                    self.fail(f"expected Z<m> or table <m>, found {tok.text!r}", tok)
                if size < 1:
                    self.fail("carrier must be nonempty", tok)
            elif key.text == "op":
                tok = self.expect_name("an op form")
                op_kind = tok.text
                if op_kind == "derived":
                    self.expect_punct("(")
                    self.expect_keyword("b")
                    self.expect_punct("=")
                    b = self.expect_int()
                    self.expect_punct(")")
                elif op_kind == "table":
                    entries = self.parse_int_list()
                elif op_kind == "hosszu":
                    self.expect_punct("(")
                    self.expect_keyword("base")
                    self.expect_punct("=")
                    base = self.expect_name("a base group name").text
                    self.expect_punct(",")
                    self.expect_keyword("phi")
                    self.expect_punct("=")
                    phi = self.parse_int_list()
                    self.expect_punct(",")
                    self.expect_keyword("b")
                    self.expect_punct("=")
                    b = self.expect_int()
                    self.expect_punct(")")
                else:
                    self.fail(f"unknown op form {op_kind!r}", tok)
            else:
                self.fail(f"unknown field {key.text!r}", key)
            self.expect_punct(";")
        self.expect_punct("}")
        for fieldname, value in (("arity", arity), ("carrier", carrier), ("op", op_kind)):
            if value is None:
                self.fail(f"group {name_tok.text!r} is missing {fieldname!r}", name_tok)
        return GroupDecl(
            name_tok.text, arity, carrier, size, op_kind,
            b=b, entries=entries, base=base, phi=phi,
        )

    def parse_fuzzy(self):
        self.expect_keyword("fuzzy")
        name_tok = self.expect_name("a fuzzy set name")
        self.expect_keyword("on")
        group = self.expect_name("a group name").text
        self.expect_punct("{")
        entries = []
        default = None
        seen = set()
        while not (self.peek().kind == "punct" and self.peek().text == "}"):
            tok = self.advance()
            if tok.kind == "name" and tok.text == "default":
                if default is not None:
                    self.fail("duplicate default", tok)
                self.expect_punct(":")
                default = self.parse_membership()
            elif tok.kind == "int":
                element = int(tok.text)
                if element in seen:
                    self.fail(f"duplicate element {element}", tok)
                seen.add(element)
                self.expect_punct(":")
                entries.append((element, self.parse_membership()))
            else:
                self.fail(f"expected an element or 'default', found {tok.text!r}", tok)
            self.expect_punct(";")
        self.expect_punct("}")
        return FuzzyDecl(name_tok.text, group, tuple(entries), default)

    def parse_hom(self):
        self.expect_keyword("hom")
        name_tok = self.expect_name("a homomorphism name")
        self.expect_punct(":")
        source = self.expect_name("a source group").text
        self.expect_punct("->")
        target = self.expect_name("a target group").text
        mapping = self.parse_int_list()
        self.expect_punct(";")
        return HomDecl(name_tok.text, source, target, mapping)


def _resolve(decls):
    names = {}
    for d in decls:
        if d.name in names:
            raise ParseError(f"duplicate declaration name {d.name!r}")
        names[d.name] = d
    groups = {d.name: d for d in decls if isinstance(d, GroupDecl)}
    for d in decls:
        if isinstance(d, GroupDecl):
            if d.op_kind == "derived":
                if d.carrier_kind != "Z":
                    raise ParseError(
                        f"group {d.name!r}: derived needs a Z<m> carrier"
                    )
                if not 0 <= d.b < d.size:
                    raise ParseError(f"group {d.name!r}: b out of carrier range")
            elif d.op_kind == "table":
                if len(d.entries) != d.size ** d.arity:
                    raise ParseError(
                        f"group {d.name!r}: expected {d.size ** d.arity} "
                        f"table entries, got {len(d.entries)}"
                    )
                if d.entries and not all(0 <= e < d.size for e in d.entries):
                    raise ParseError(f"group {d.name!r}: table entry out of range")
            else:
                base = groups.get(d.base)
                if base is None:
                    raise ParseError(f"group {d.name!r}: unknown base {d.base!r}")
                if base.arity != 2:
                    raise ParseError(
                        f"group {d.name!r}: base {d.base!r} must have arity 2"
                    )
                if base.size != d.size:
                    raise ParseError(
                        f"group {d.name!r}: base carrier size differs"
                    )
                if len(d.phi) != d.size or sorted(d.phi) != list(range(d.size)):
                    raise ParseError(
                        f"group {d.name!r}: phi must be a permutation of the carrier"
                    )
                if not 0 <= d.b < d.size:
                    raise ParseError(f"group {d.name!r}: b out of carrier range")
        elif isinstance(d, FuzzyDecl):
            grp = groups.get(d.group)
            if grp is None:
                raise ParseError(f"fuzzy {d.name!r}: unknown group {d.group!r}")
            covered = set()
            for element, _ in d.entries:
                if not 0 <= element < grp.size:
                    raise ParseError(
                        f"fuzzy {d.name!r}: element {element} out of carrier range"
                    )
                covered.add(element)
            if d.default is None and covered != set(range(grp.size)):
                missing = sorted(set(range(grp.size)) - covered)
                raise ParseError(
                    f"fuzzy {d.name!r}: no membership for {missing} and no default"
                )
        else:
            src = groups.get(d.source)
            dst = groups.get(d.target)
            if src is None:
                raise ParseError(f"hom {d.name!r}: unknown group {d.source!r}")
            if dst is None:
                raise ParseError(f"hom {d.name!r}: unknown group {d.target!r}")
            if src.arity != dst.arity:
                raise ParseError(
                    f"hom {d.name!r}: source and target arities differ"
                )
            if len(d.mapping) != src.size:
                raise ParseError(
                    f"hom {d.name!r}: mapping must assign all {src.size} elements"
                )
            if d.mapping and not all(0 <= v < dst.size for v in d.mapping):
                raise ParseError(f"hom {d.name!r}: mapping value out of range")


def parse_spec(text):
    """Parse and statically resolve a document; ParseError on any defect."""
    decls = _Parser(_lex(text)).parse_document()
    _resolve(decls)
    return SpecDocument(tuple(decls))


def render_document(doc):
    """Canonical text for a document; reparses to an equal document."""
    chunks = []
    for d in doc.decls:
        if isinstance(d, GroupDecl):
            carrier = f"Z{d.size}" if d.carrier_kind == "Z" else f"table {d.size}"
            if d.op_kind == "derived":
                op = f"derived(b={d.b})"
            elif d.op_kind == "table":
                op = "table [" + ", ".join(str(e) for e in d.entries) + "]"
            else:
                phi = ", ".join(str(v) for v in d.phi)
                op = f"hosszu(base={d.base}, phi=[{phi}], b={d.b})"
            chunks.append(
                f"group {d.name} {{ arity: {d.arity}; carrier: {carrier}; op: {op}; }}"
            )
        elif isinstance(d, FuzzyDecl):
            parts = [f"{element}: {value}" for element, value in d.entries]
            if d.default is not None:
                parts.append(f"default: {d.default}")
            body = "; ".join(parts)
            if body:
                body += ";"
            chunks.append(f"fuzzy {d.name} on {d.group} {{ {body} }}")
        else:
            mapping = ", ".join(str(v) for v in d.mapping)
            chunks.append(
                f"hom {d.name}: {d.source} -> {d.target} [{mapping}];"
            )
    return "\n".join(chunks) + "\n"
