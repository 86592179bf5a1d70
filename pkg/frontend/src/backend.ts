/**
 * Runner for the polygroup command line backend.
 *
 * Every request is one subprocess call `python3 -m polygroup <verb> ...
 * --json --spec FILE`.  The wire contract: stdout carries a single JSON
 * object with sorted keys and a "status" of "pass", "fail", or "error";
 * the exit code is 0 (pass), 1 (a property fails, witness included),
 * 2 (the request could not be resolved), or 3 (semantically invalid for
 * the target).
 */

import { spawnSync } from "node:child_process";

export interface BackendReply {
  readonly code: number;
  readonly payload: Record<string, unknown>;
  readonly stderr: string;
}

export interface BackendRunner {
  run(args: readonly string[]): BackendReply;
}

/** The backend answered outside its documented contract. */
export class BackendProtocolError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "BackendProtocolError";
  }
}

export interface PythonBackendOptions {
  readonly python?: string;
  readonly timeoutMs?: number;
}

export class PythonBackend implements BackendRunner {
  private readonly python: string;
  private readonly timeoutMs: number;

  constructor(
    private readonly specPath: string,
    options: PythonBackendOptions = {},
  ) {
    this.python = options.python ?? "python3";
    this.timeoutMs = options.timeoutMs ?? 60_000;
  }

  run(args: readonly string[]): BackendReply {
    const argv = ["-m", "polygroup", ...args, "--json", "--spec", this.specPath];
    const proc = spawnSync(this.python, argv, {
      encoding: "utf8",
      timeout: this.timeoutMs,
    });
    if (proc.error !== undefined) {
      throw new BackendProtocolError(
        `backend did not run (${this.python}): ${proc.error.message}`,
      );
    }
    const code = proc.status;
    if (code === null) {
      throw new BackendProtocolError(
        `backend was killed by signal ${proc.signal ?? "unknown"}`,
      );
    }
    let payload: unknown;
    try {
      payload = JSON.parse(proc.stdout);
    } catch {
      throw new BackendProtocolError(
        `backend emitted non-JSON output for '${args.join(" ")}' (exit ${code})`,
      );
    }
    if (typeof payload !== "object" || payload === null || Array.isArray(payload)) {
      throw new BackendProtocolError(
        `backend payload for '${args.join(" ")}' is not an object`,
      );
    }
    return { code, payload: payload as Record<string, unknown>, stderr: proc.stderr };
  }
}
