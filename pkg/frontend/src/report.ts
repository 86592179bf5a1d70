/**
 * Deterministic aggregate report over one document.
 *
 * For every declaration, in declaration order, the backend is asked the
 * full battery of questions that make sense for it: groups are validated
 * and their subgroups listed; fuzzy sets are checked, their level families
 * printed, and their normality facts gathered when they pass; each
 * homomorphism maps every fuzzy set declared on its source.  The result
 * renders to text and to stable JSON (recursively sorted keys); both forms
 * are byte-identical across runs.
 */

import { BackendProtocolError, BackendReply, BackendRunner } from "./backend.js";
import { Document, FuzzyDecl, GroupDecl, HomDecl } from "./document.js";

export type SectionStatus = "pass" | "fail" | "error";
export type Verdict = "PASS" | "FAIL" | "ERROR";

export interface GroupSection {
  readonly name: string;
  readonly arity: number;
  readonly carrier: string;
  readonly op: string;
  readonly status: SectionStatus;
  readonly skew?: readonly number[];
  readonly certification?: string;
  readonly subgroups?: ReadonlyArray<readonly number[]>;
  readonly reason?: string;
  readonly error?: string;
}

export interface LevelLine {
  readonly t: string;
  readonly elements: readonly number[];
}

export interface NormalityFacts {
  readonly is_normal: boolean;
  readonly is_completely_normal: boolean;
  readonly is_two_valued: boolean;
  readonly mu_maximal: readonly number[];
  readonly g_mu: readonly number[];
  readonly g_mu_is_maximal_subgroup: boolean;
}

export interface FuzzySection {
  readonly name: string;
  readonly group: string;
  readonly status: SectionStatus;
  readonly axiom?: string;
  readonly witness?: number | readonly number[];
  readonly levels?: readonly LevelLine[];
  readonly normality?: NormalityFacts;
  readonly error?: string;
}

export interface ImageLine {
  readonly fuzzy: string;
  readonly status: SectionStatus;
  readonly values?: readonly string[];
  readonly error?: string;
}

export interface HomSection {
  readonly name: string;
  readonly source: string;
  readonly target: string;
  readonly images: readonly ImageLine[];
}

export interface Report {
  readonly document: string;
  readonly counts: { readonly groups: number; readonly fuzzies: number; readonly homs: number };
  readonly groups: readonly GroupSection[];
  readonly fuzzies: readonly FuzzySection[];
  readonly homs: readonly HomSection[];
  readonly checks: number;
  readonly failures: number;
  readonly errors: readonly string[];
  readonly verdict: Verdict;
}

function carrierLabel(decl: GroupDecl): string {
  return decl.carrier === "Z" ? `Z${decl.size}` : `table ${decl.size}`;
}

function expectContract(reply: BackendReply, request: string): void {
  if (reply.code === 2) {
    throw new BackendProtocolError(
      `backend could not resolve '${request}' that parsed locally: ${String(
        reply.payload["error"] ?? "",
      )}`,
    );
  }
  if (reply.code !== 0 && reply.code !== 1 && reply.code !== 3) {
    throw new BackendProtocolError(`backend exit ${reply.code} for '${request}'`);
  }
}

function errorText(reply: BackendReply): string {
  return String(reply.payload["error"] ?? "unspecified backend error");
}

export function buildReport(
  doc: Document,
  documentName: string,
  backend: BackendRunner,
): Report {
  const groups: GroupSection[] = [];
  const fuzzies: FuzzySection[] = [];
  const homs: HomSection[] = [];
  const errors: string[] = [];
  let checks = 0;
  let failures = 0;

  for (const decl of doc.decls) {
    if (decl.kind === "group") {
      groups.push(groupSection(decl));
    } else if (decl.kind === "fuzzy") {
      fuzzies.push(fuzzySection(decl));
    } else {
      homs.push(homSection(decl));
    }
  }

  const verdict: Verdict = errors.length > 0 ? "ERROR" : failures > 0 ? "FAIL" : "PASS";
  return {
    document: documentName,
    counts: {
      groups: doc.groups.size,
      fuzzies: doc.fuzzies.size,
      homs: doc.homs.size,
    },
    groups,
    fuzzies,
    homs,
    checks,
    failures,
    errors,
    verdict,
  };

  function groupSection(decl: GroupDecl): GroupSection {
    const head = {
      name: decl.name,
      arity: decl.arity,
      carrier: carrierLabel(decl),
      op: decl.op,
    };
    const reply = backend.run(["validate", decl.name]);
    expectContract(reply, `validate ${decl.name}`);
    checks += 1;
    if (reply.code === 1) {
      failures += 1;
      return { ...head, status: "fail", reason: String(reply.payload["reason"] ?? "") };
    }
    if (reply.code === 3) {
      const error = errorText(reply);
      errors.push(`group ${decl.name}: ${error}`);
      return { ...head, status: "error", error };
    }
    const subs = backend.run(["subgroups", decl.name]);
    expectContract(subs, `subgroups ${decl.name}`);
    if (subs.code !== 0) {
      throw new BackendProtocolError(
        `backend rejected 'subgroups ${decl.name}' on a validated group`,
      );
    }
    const section: GroupSection = {
      ...head,
      status: "pass",
      skew: reply.payload["skew"] as number[],
      subgroups: subs.payload["subgroups"] as number[][],
    };
    const certification = reply.payload["certification"];
    return typeof certification === "string" ? { ...section, certification } : section;
  }

  function fuzzySection(decl: FuzzyDecl): FuzzySection {
    const head = { name: decl.name, group: decl.group };
    const reply = backend.run(["check-fuzzy", decl.name]);
    expectContract(reply, `check-fuzzy ${decl.name}`);
    checks += 1;
    if (reply.code === 3) {
      const error = errorText(reply);
      errors.push(`fuzzy ${decl.name}: ${error}`);
      return { ...head, status: "error", error };
    }
    const levelsReply = backend.run(["levels", decl.name]);
    expectContract(levelsReply, `levels ${decl.name}`);
    if (levelsReply.code !== 0) {
      throw new BackendProtocolError(
        `backend rejected 'levels ${decl.name}' after answering the check`,
      );
    }
    const levels = levelsReply.payload["levels"] as LevelLine[];
    if (reply.code === 1) {
      failures += 1;
      const witness = reply.payload["witness"] as number | number[];
      return {
        ...head,
        status: "fail",
        axiom: String(reply.payload["axiom"] ?? ""),
        witness,
        levels,
      };
    }
    const normReply = backend.run(["report", decl.name]);
    expectContract(normReply, `report ${decl.name}`);
    if (normReply.code !== 0) {
      throw new BackendProtocolError(
        `backend rejected 'report ${decl.name}' on a passing fuzzy set`,
      );
    }
    const p = normReply.payload;
    return {
      ...head,
      status: "pass",
      levels,
      normality: {
        is_normal: p["is_normal"] as boolean,
        is_completely_normal: p["is_completely_normal"] as boolean,
        is_two_valued: p["is_two_valued"] as boolean,
        mu_maximal: p["mu_maximal"] as number[],
        g_mu: p["g_mu"] as number[],
        g_mu_is_maximal_subgroup: p["g_mu_is_maximal_subgroup"] as boolean,
      },
    };
  }

  function homSection(decl: HomDecl): HomSection {
    const images: ImageLine[] = [];
    for (const fz of doc.decls) {
      if (fz.kind !== "fuzzy" || fz.group !== decl.source) {
        continue;
      }
      const reply = backend.run(["image", decl.name, fz.name]);
      expectContract(reply, `image ${decl.name} ${fz.name}`);
      if (reply.code === 3) {
        const error = errorText(reply);
        errors.push(`hom ${decl.name}: ${error}`);
        images.push({ fuzzy: fz.name, status: "error", error });
      } else if (reply.code !== 0) {
        throw new BackendProtocolError(
          `backend failed 'image ${decl.name} ${fz.name}' with exit ${reply.code}`,
        );
      } else {
        images.push({
          fuzzy: fz.name,
          status: "pass",
          values: reply.payload["values"] as string[],
        });
      }
    }
    return { name: decl.name, source: decl.source, target: decl.target, images };
  }
}

// -- rendering -------------------------------------------------------------

function elemSet(elements: readonly number[]): string {
  return `{${elements.join(",")}}`;
}

function witnessText(witness: number | readonly number[]): string {
  return typeof witness === "number" ? String(witness) : `(${witness.join(", ")})`;
}

export function renderText(report: Report): string {
  const lines: string[] = [];
  lines.push(`polygroup report for ${report.document}`);
  lines.push(
    `groups: ${report.counts.groups}  fuzzy sets: ${report.counts.fuzzies}  homs: ${report.counts.homs}`,
  );
  for (const g of report.groups) {
    lines.push("");
    lines.push(`group ${g.name}  (arity ${g.arity}, ${g.carrier}, ${g.op})`);
    if (g.status === "pass") {
      lines.push(`  validate: PASS  skew: ${g.skew!.join(",")}`);
      if (g.certification !== undefined) {
        lines.push(`  certification: ${g.certification}`);
      }
      lines.push(`  subgroups: ${g.subgroups!.map(elemSet).join(" ")}`);
    } else if (g.status === "fail") {
      lines.push(`  validate: FAIL  ${g.reason}`);
    } else {
      lines.push(`  validate: ERROR  ${g.error}`);
    }
  }
  for (const f of report.fuzzies) {
    lines.push("");
    lines.push(`fuzzy ${f.name} on ${f.group}`);
    if (f.status === "error") {
      lines.push(`  check: ERROR  ${f.error}`);
      continue;
    }
    if (f.status === "fail") {
      lines.push(`  check: FAIL  axiom ${f.axiom}, witness ${witnessText(f.witness!)}`);
    } else {
      lines.push("  check: PASS");
    }
    lines.push(
      `  levels: ${f.levels!.map((l) => `t=${l.t} ${elemSet(l.elements)}`).join("; ")}`,
    );
    if (f.normality !== undefined) {
      const n = f.normality;
      lines.push(
        `  normal: ${n.is_normal ? "yes" : "no"}  maximal at: ${elemSet(
          n.mu_maximal,
        )}  top level: ${elemSet(n.g_mu)}`,
      );
    }
  }
  for (const h of report.homs) {
    lines.push("");
    lines.push(`hom ${h.name}: ${h.source} -> ${h.target}`);
    if (h.images.length === 0) {
      lines.push(`  (no fuzzy sets declared on ${h.source})`);
    }
    for (const img of h.images) {
      if (img.status === "pass") {
        lines.push(`  image of ${img.fuzzy}: ${img.values!.join(", ")}`);
      } else {
        lines.push(`  image of ${img.fuzzy}: ERROR  ${img.error}`);
      }
    }
  }
  lines.push("");
  lines.push(
    `verdict: ${report.verdict}  (${report.checks} checks, ${report.failures} failed, ${report.errors.length} errors)`,
  );
  return lines.join("\n") + "\n";
}

/** JSON.stringify with recursively sorted object keys. */
export function stableStringify(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return `[${value.map(stableStringify).join(", ")}]`;
  }
  const entries = Object.entries(value as Record<string, unknown>)
    .filter(([, v]) => v !== undefined)
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([k, v]) => `${JSON.stringify(k)}: ${stableStringify(v)}`);
  return `{${entries.join(", ")}}`;
}

export function renderJson(report: Report): string {
  return stableStringify(report) + "\n";
}
