/**
 * Parser for the polygroup document language with positioned diagnostics.
 *
 * The grammar matches the backend's reader exactly:
 *
 *     group T { arity: 3; carrier: Z4; op: derived(b=0); }
 *     group B { arity: 2; carrier: Z4; op: table [0,1,2,3, ...]; }
 *     group H { arity: 3; carrier: Z4; op: hosszu(base=B, phi=[0,1,2,3], b=0); }
 *     fuzzy mu on T { 0: 1; 2: 1/2; default: 0.3; }
 *     hom h: T -> T [0, 2, 0, 2];
 *
 * `#` starts a comment; memberships are integers, fractions p/q, or exact
 * decimals; declaration order carries no meaning and forward references are
 * allowed.  Every statically checkable defect (syntax, duplicate names,
 * unresolved references, range violations) is reported as a diagnostic with
 * a 1-based line:column position; group axioms themselves are the backend's
 * job.
 */

import {
  ONE,
  Rational,
  ZERO,
  compareRational,
  parseRational,
  rational,
} from "./rational.js";

export interface Position {
  readonly line: number;
  readonly column: number;
}

export interface Diagnostic extends Position {
  readonly message: string;
}

export class DocumentError extends Error {
  readonly diagnostic: Diagnostic;

  constructor(diagnostic: Diagnostic) {
    super(`${diagnostic.line}:${diagnostic.column}: ${diagnostic.message}`);
    this.name = "DocumentError";
    this.diagnostic = diagnostic;
  }
}

export interface GroupDecl {
  readonly kind: "group";
  readonly name: string;
  readonly arity: number;
  readonly carrier: "Z" | "table";
  readonly size: number;
  readonly op: "derived" | "table" | "hosszu";
  readonly b: number | null;
  readonly entries: readonly number[] | null;
  readonly base: string | null;
  readonly phi: readonly number[] | null;
  readonly at: Position;
}

export interface FuzzyDecl {
  readonly kind: "fuzzy";
  readonly name: string;
  readonly group: string;
  readonly entries: ReadonlyArray<readonly [number, Rational]>;
  readonly defaultValue: Rational | null;
  readonly at: Position;
}

export interface HomDecl {
  readonly kind: "hom";
  readonly name: string;
  readonly source: string;
  readonly target: string;
  readonly mapping: readonly number[];
  readonly at: Position;
}

export type Decl = GroupDecl | FuzzyDecl | HomDecl;

export interface Document {
  readonly decls: readonly Decl[];
  readonly groups: ReadonlyMap<string, GroupDecl>;
  readonly fuzzies: ReadonlyMap<string, FuzzyDecl>;
  readonly homs: ReadonlyMap<string, HomDecl>;
}

// -- lexer ---------------------------------------------------------------

type TokenKind = "int" | "decimal" | "name" | "punct" | "eof";

interface Token {
  readonly kind: TokenKind;
  readonly text: string;
  readonly line: number;
  readonly column: number;
}

const TOKEN_RE =
  /(?<ws>\s+)|(?<comment>#[^\n]*)|(?<decimal>\d+\.\d+)|(?<int>\d+)|(?<name>[A-Za-z_][A-Za-z0-9_]*)|(?<arrow>->)|(?<punct>[{}()\[\]:;,=/])/y;

function lex(text: string): Token[] {
  const tokens: Token[] = [];
  let line = 1;
  let column = 1;
  let pos = 0;
  while (pos < text.length) {
    TOKEN_RE.lastIndex = pos;
    const m = TOKEN_RE.exec(text);
    if (m === null) {
      throw new DocumentError({
        line,
        column,
        message: `unexpected character ${JSON.stringify(text[pos])}`,
      });
    }
    const groups = m.groups!;
    const chunk = m[0];
    let kind: TokenKind | null = null;
    if (groups["decimal"] !== undefined) kind = "decimal";
    else if (groups["int"] !== undefined) kind = "int";
    else if (groups["name"] !== undefined) kind = "name";
    else if (groups["arrow"] !== undefined || groups["punct"] !== undefined) kind = "punct";
    if (kind !== null) {
      tokens.push({ kind, text: chunk, line, column });
    }
    const newlines = chunk.split("\n").length - 1;
    if (newlines > 0) {
      line += newlines;
      column = chunk.length - chunk.lastIndexOf("\n");
    } else {
      column += chunk.length;
    }
    pos += chunk.length;
  }
  tokens.push({ kind: "eof", text: "", line, column });
  return tokens;
}

// -- parser --------------------------------------------------------------

class Parser {
  private pos = 0;

  constructor(private readonly tokens: Token[]) {}

  private peek(): Token {
    return this.tokens[this.pos]!;
  }

  private advance(): Token {
    return this.tokens[this.pos++]!;
  }

  private fail(message: string, tok?: Token): never {
    const at = tok ?? this.peek();
    throw new DocumentError({ line: at.line, column: at.column, message });
  }

  private expectPunct(text: string): Token {
    const tok = this.advance();
    if (tok.kind !== "punct" || tok.text !== text) {
      this.fail(`expected '${text}', found '${tok.text}'`, tok);
    }
    return tok;
  }

  private expectName(what = "a name"): Token {
    const tok = this.advance();
    if (tok.kind !== "name") {
      this.fail(`expected ${what}, found '${tok.text}'`, tok);
    }
    return tok;
  }

  private expectKeyword(word: string): Token {
    const tok = this.advance();
    if (tok.kind !== "name" || tok.text !== word) {
      this.fail(`expected '${word}', found '${tok.text}'`, tok);
    }
    return tok;
  }

  private expectInt(what = "an integer"): number {
    const tok = this.advance();
    if (tok.kind !== "int") {
      this.fail(`expected ${what}, found '${tok.text}'`, tok);
    }
    return Number.parseInt(tok.text, 10);
  }

  private atPunct(text: string): boolean {
    const tok = this.peek();
    return tok.kind === "punct" && tok.text === text;
  }

  private parseMembership(): Rational {
    const tok = this.advance();
    let value: Rational;
    if (tok.kind === "decimal") {
      value = parseRational(tok.text);
    } else if (tok.kind === "int") {
      let den = 1n;
      if (this.atPunct("/")) {
        this.advance();
        const denTok = this.advance();
        if (denTok.kind !== "int") {
          this.fail(`expected a denominator, found '${denTok.text}'`, denTok);
        }
        den = BigInt(denTok.text);
        if (den === 0n) {
          this.fail("zero denominator", tok);
        }
      }
      value = rational(BigInt(tok.text), den);
    } else {
      this.fail(`expected a membership value, found '${tok.text}'`, tok);
    }
    if (compareRational(value, ZERO) < 0 || compareRational(value, ONE) > 0) {
      this.fail(`membership out of [0, 1]`, tok);
    }
    return value;
  }

  private parseIntList(): number[] {
    this.expectPunct("[");
    const items: number[] = [];
    if (!this.atPunct("]")) {
      items.push(this.expectInt());
      while (this.atPunct(",")) {
        this.advance();
        items.push(this.expectInt());
      }
    }
    this.expectPunct("]");
    return items;
  }

  parseDocument(): Decl[] {
    const decls: Decl[] = [];
    while (this.peek().kind !== "eof") {
      const tok = this.peek();
      if (tok.kind !== "name") {
        this.fail(`expected a declaration, found '${tok.text}'`);
      }
      if (tok.text === "group") {
        decls.push(this.parseGroup());
      } else if (tok.text === "fuzzy") {
        decls.push(this.parseFuzzy());
      } else if (tok.text === "hom") {
        decls.push(this.parseHom());
      } else {
        this.fail(`unknown declaration '${tok.text}'`);
      }
    }
    return decls;
  }

  private parseGroup(): GroupDecl {
    const kw = this.expectKeyword("group");
    const nameTok = this.expectName("a group name");
    this.expectPunct("{");
    let arity: number | null = null;
    let carrier: "Z" | "table" | null = null;
    let size: number | null = null;
    let op: "derived" | "table" | "hosszu" | null = null;
    let b: number | null = null;
    let entries: number[] | null = null;
    let base: string | null = null;
    let phi: number[] | null = null;
    const seen = new Set<string>();
    while (!this.atPunct("}")) {
      const key = this.expectName("a field name");
      if (seen.has(key.text)) {
        this.fail(`duplicate field '${key.text}'`, key);
      }
      seen.add(key.text);
      this.expectPunct(":");
      if (key.text === "arity") {
        arity = this.expectInt("an arity");
        if (arity < 2) {
          this.fail("arity must be at least 2", key);
        }
      } else if (key.text === "carrier") {
        const tok = this.advance();
        if (tok.kind === "name" && /^Z\d+$/.test(tok.text)) {
          carrier = "Z";
          size = Number.parseInt(tok.text.slice(1), 10);
        } else if (tok.kind === "name" && tok.text === "table") {
          carrier = "table";
          size = this.expectInt("a carrier size");
        } else {
          this.fail(`expected Z<m> or table <m>, found '${tok.text}'`, tok);
        }
        if (size < 1) {
          this.fail("carrier must be nonempty", tok);
        }
      } else if (key.text === "op") {
        const tok = this.expectName("an op form");
        if (tok.text === "derived") {
          op = "derived";
          this.expectPunct("(");
          this.expectKeyword("b");
          this.expectPunct("=");
          b = this.expectInt();
          this.expectPunct(")");
        } else if (tok.text === "table") {
          op = "table";
          entries = this.parseIntList();
        } else if (tok.text === "hosszu") {
          op = "hosszu";
          this.expectPunct("(");
          this.expectKeyword("base");
          this.expectPunct("=");
          base = this.expectName("a base group name").text;
          this.expectPunct(",");
          this.expectKeyword("phi");
          this.expectPunct("=");
          phi = this.parseIntList();
          this.expectPunct(",");
          this.expectKeyword("b");
          this.expectPunct("=");
          b = this.expectInt();
          this.expectPunct(")");
        } else {
          this.fail(`unknown op form '${tok.text}'`, tok);
        }
      } else {
        this.fail(`unknown field '${key.text}'`, key);
      }
      this.expectPunct(";");
    }
    this.expectPunct("}");
    if (arity === null) this.fail(`group '${nameTok.text}' is missing 'arity'`, nameTok);
    if (carrier === null || size === null) {
      this.fail(`group '${nameTok.text}' is missing 'carrier'`, nameTok);
    }
    if (op === null) this.fail(`group '${nameTok.text}' is missing 'op'`, nameTok);
    return {
      kind: "group",
      name: nameTok.text,
      arity,
      carrier,
      size,
      op,
      b,
      entries,
      base,
      phi,
      at: { line: kw.line, column: kw.column },
    };
  }

  private parseFuzzy(): FuzzyDecl {
    const kw = this.expectKeyword("fuzzy");
    const nameTok = this.expectName("a fuzzy set name");
    this.expectKeyword("on");
    const group = this.expectName("a group name").text;
    this.expectPunct("{");
    const entries: Array<readonly [number, Rational]> = [];
    let defaultValue: Rational | null = null;
    const seen = new Set<number>();
    while (!this.atPunct("}")) {
      const tok = this.advance();
      if (tok.kind === "name" && tok.text === "default") {
        if (defaultValue !== null) {
          this.fail("duplicate default", tok);
        }
        this.expectPunct(":");
        defaultValue = this.parseMembership();
      } else if (tok.kind === "int") {
        const element = Number.parseInt(tok.text, 10);
        if (seen.has(element)) {
          this.fail(`duplicate element ${element}`, tok);
        }
        seen.add(element);
        this.expectPunct(":");
        entries.push([element, this.parseMembership()]);
      } else {
        this.fail(`expected an element or 'default', found '${tok.text}'`, tok);
      }
      this.expectPunct(";");
    }
    this.expectPunct("}");
    return {
      kind: "fuzzy",
      name: nameTok.text,
      group,
      entries,
      defaultValue,
      at: { line: kw.line, column: kw.column },
    };
  }

  private parseHom(): HomDecl {
    const kw = this.expectKeyword("hom");
    const nameTok = this.expectName("a homomorphism name");
    this.expectPunct(":");
    const source = this.expectName("a source group").text;
    this.expectPunct("->");
    const target = this.expectName("a target group").text;
    const mapping = this.parseIntList();
    this.expectPunct(";");
    return {
      kind: "hom",
      name: nameTok.text,
      source,
      target,
      mapping,
      at: { line: kw.line, column: kw.column },
    };
  }
}

// -- static resolution ----------------------------------------------------

function resolve(decls: readonly Decl[]): void {
  const fail: (decl: Decl, message: string) => never = (decl, message) => {
    throw new DocumentError({ line: decl.at.line, column: decl.at.column, message });
  };
  const names = new Set<string>();
  const groups = new Map<string, GroupDecl>();
  for (const decl of decls) {
    if (names.has(decl.name)) {
      fail(decl, `duplicate declaration name '${decl.name}'`);
    }
    names.add(decl.name);
    if (decl.kind === "group") {
      groups.set(decl.name, decl);
    }
  }
  for (const decl of decls) {
    if (decl.kind === "group") {
      if (decl.op === "derived") {
        if (decl.carrier !== "Z") {
          fail(decl, `group '${decl.name}': derived needs a Z<m> carrier`);
        }
        if (decl.b === null || decl.b < 0 || decl.b >= decl.size) {
          fail(decl, `group '${decl.name}': b out of carrier range`);
        }
      } else if (decl.op === "table") {
        const want = decl.size ** decl.arity;
        if (decl.entries === null || decl.entries.length !== want) {
          fail(
            decl,
            `group '${decl.name}': expected ${want} table entries, got ${decl.entries?.length ?? 0}`,
          );
        }
        if (decl.entries.some((e) => e < 0 || e >= decl.size)) {
          fail(decl, `group '${decl.name}': table entry out of range`);
        }
      } else {
        const base = decl.base === null ? undefined : groups.get(decl.base);
        if (base === undefined) {
          fail(decl, `group '${decl.name}': unknown base '${decl.base}'`);
        }
        if (base.arity !== 2) {
          fail(decl, `group '${decl.name}': base '${decl.base}' must have arity 2`);
        }
        if (base.size !== decl.size) {
          fail(decl, `group '${decl.name}': base carrier size differs`);
        }
        const phi = decl.phi ?? [];
        const sorted = [...phi].sort((a, z) => a - z);
        if (phi.length !== decl.size || sorted.some((v, i) => v !== i)) {
          fail(decl, `group '${decl.name}': phi must be a permutation of the carrier`);
        }
        if (decl.b === null || decl.b < 0 || decl.b >= decl.size) {
          fail(decl, `group '${decl.name}': b out of carrier range`);
        }
      }
    } else if (decl.kind === "fuzzy") {
      const grp = groups.get(decl.group);
      if (grp === undefined) {
        fail(decl, `fuzzy '${decl.name}': unknown group '${decl.group}'`);
      }
      const covered = new Set<number>();
      for (const [element] of decl.entries) {
        if (element < 0 || element >= grp.size) {
          fail(decl, `fuzzy '${decl.name}': element ${element} out of carrier range`);
        }
        covered.add(element);
      }
      if (decl.defaultValue === null && covered.size !== grp.size) {
        const missing = [];
        for (let x = 0; x < grp.size; x++) {
          if (!covered.has(x)) missing.push(x);
        }
        fail(
          decl,
          `fuzzy '${decl.name}': no membership for [${missing.join(", ")}] and no default`,
        );
      }
    } else {
      const src = groups.get(decl.source);
      const dst = groups.get(decl.target);
      if (src === undefined) {
        fail(decl, `hom '${decl.name}': unknown group '${decl.source}'`);
      }
      if (dst === undefined) {
        fail(decl, `hom '${decl.name}': unknown group '${decl.target}'`);
      }
      if (src.arity !== dst.arity) {
        fail(decl, `hom '${decl.name}': source and target arities differ`);
      }
      if (decl.mapping.length !== src.size) {
        fail(decl, `hom '${decl.name}': mapping must assign all ${src.size} elements`);
      }
      if (decl.mapping.some((v) => v < 0 || v >= dst.size)) {
        fail(decl, `hom '${decl.name}': mapping value out of range`);
      }
    }
  }
}

/** Parse and statically resolve a document; DocumentError on any defect. */
export function parseDocument(text: string): Document {
  const decls = new Parser(lex(text)).parseDocument();
  resolve(decls);
  const groups = new Map<string, GroupDecl>();
  const fuzzies = new Map<string, FuzzyDecl>();
  const homs = new Map<string, HomDecl>();
  for (const decl of decls) {
    if (decl.kind === "group") groups.set(decl.name, decl);
    else if (decl.kind === "fuzzy") fuzzies.set(decl.name, decl);
    else homs.set(decl.name, decl);
  }
  return { decls, groups, fuzzies, homs };
}
