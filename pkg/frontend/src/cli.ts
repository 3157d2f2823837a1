/**
 * Offline probe harness CLI.
 *
 * Usage: node dist/cli.js --probes DIR [--cadence MS] FILE...
 *
 * Emits one probe_detection event line per hit to stdout (the same format
 * the analysis pipeline ingests) and a counter summary to stderr. Exits 2
 * on usage errors.
 */

import { EventSink } from "./events.js";
import { offlineProbe } from "./offline.js";
import { loadProbeBundle } from "./probes.js";
import { DEFAULT_CADENCE_MS } from "./types.js";

interface CliArgs {
  probesDir: string;
  cadenceMs: number;
  files: string[];
}

export function parseArgs(argv: string[]): CliArgs {
  let probesDir: string | undefined;
  let cadenceMs = DEFAULT_CADENCE_MS;
  const files: string[] = [];
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i];
    if (arg === "--probes") {
      probesDir = argv[++i];
    } else if (arg === "--cadence") {
      cadenceMs = Number(argv[++i]);
    } else if (arg === "--help" || arg === "-h") {
      throw new UsageError(USAGE, 0);
    } else if (arg.startsWith("--")) {
      throw new UsageError(`unknown option ${arg}\n${USAGE}`);
    } else {
      files.push(arg);
    }
  }
  if (!probesDir) {
    throw new UsageError(`--probes DIR is required\n${USAGE}`);
  }
  if (!files.length) {
    throw new UsageError(`at least one script file is required\n${USAGE}`);
  }
  if (!Number.isFinite(cadenceMs) || cadenceMs <= 0) {
    throw new UsageError("--cadence must be a positive number of milliseconds");
  }
  return { probesDir, cadenceMs, files };
}

const USAGE = "usage: offline-probe --probes DIR [--cadence MS] FILE...";

export class UsageError extends Error {
  readonly exitCode: number;

  constructor(message: string, exitCode = 2) {
    super(message);
    this.exitCode = exitCode;
  }
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      (err.exitCode === 0 ? console.log : console.error)(err.message);
      return err.exitCode;
    }
    throw err;
  }
  const bundle = loadProbeBundle(args.probesDir, args.cadenceMs);
  const sink = new EventSink((line) => console.log(line));
  let loadFailures = 0;
  let nameOnly = 0;
  let detected = 0;
  for (const file of args.files) {
    const run = offlineProbe(file, bundle);
    loadFailures += run.counters.loadFailures;
    nameOnly += run.counters.nameOnly;
    detected += run.counters.detected;
    if (run.loadError) {
      console.error(`${file}: load failure (${run.loadError})`);
    }
    for (const result of run.results) {
      sink.emit(result);
    }
  }
  console.error(
    `offline-probe: ${args.files.length} file(s), ${detected} detected, ` +
      `${nameOnly} name-only, ${loadFailures} load failure(s)`,
  );
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("cli.ts")) {
  process.exit(main(process.argv.slice(2)));
}
