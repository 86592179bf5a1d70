#!/usr/bin/env node
/**
 * polyreport: one deterministic report over a polygroup document.
 *
 * usage: polyreport <document> [--json] [--python EXE]
 *
 * Exit codes follow the backend's convention: 0 every check passed,
 * 1 at least one property failed (witnesses are in the report), 2 the
 * document could not be read or parsed (diagnostics with positions),
 * 3 a declaration is semantically invalid for its target.
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";
import { PythonBackend } from "./backend.js";
import { DocumentError, parseDocument } from "./document.js";
import { buildReport, renderJson, renderText, stableStringify } from "./report.js";

const USAGE = "usage: polyreport <document> [--json] [--python EXE]";

interface CliArgs {
  readonly file: string;
  readonly json: boolean;
  readonly python: string;
}

function parseArgs(argv: readonly string[]): CliArgs | null {
  let file: string | null = null;
  let json = false;
  let python = "python3";
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    if (arg === "--json") {
      json = true;
    } else if (arg === "--python") {
      const value = argv[++i];
      if (value === undefined) return null;
      python = value;
    } else if (arg.startsWith("-")) {
      return null;
    } else if (file === null) {
      file = arg;
    } else {
      return null;
    }
  }
  return file === null ? null : { file, json, python };
}

function emitDiagnostic(
  args: CliArgs,
  where: string,
  line: number,
  column: number,
  message: string,
): void {
  if (args.json) {
    process.stdout.write(
      stableStringify({ diagnostics: [{ column, file: where, line, message }] }) + "\n",
    );
  }
  process.stderr.write(`${where}:${line}:${column}: error: ${message}\n`);
}

export function main(argv: readonly string[]): number {
  const args = parseArgs(argv);
  if (args === null) {
    process.stderr.write(USAGE + "\n");
    return 2;
  }
  let text: string;
  try {
    text = readFileSync(args.file, "utf8");
  } catch (exc) {
    const message = exc instanceof Error ? exc.message : String(exc);
    emitDiagnostic(args, args.file, 0, 0, `cannot read document: ${message}`);
    return 2;
  }
  let doc;
  try {
    doc = parseDocument(text);
  } catch (exc) {
    if (exc instanceof DocumentError) {
      const d = exc.diagnostic;
      emitDiagnostic(args, args.file, d.line, d.column, d.message);
      return 2;
    }
    throw exc;
  }
  const backend = new PythonBackend(args.file, { python: args.python });
  const report = buildReport(doc, basename(args.file), backend);
  process.stdout.write(args.json ? renderJson(report) : renderText(report));
  return report.verdict === "PASS" ? 0 : report.verdict === "FAIL" ? 1 : 3;
}

process.exitCode = main(process.argv.slice(2));
