/**
 * Probe compilation and single-shot execution.
 */

import { readFileSync, readdirSync } from "node:fs";
import { basename, join } from "node:path";
import {
  DEFAULT_CADENCE_MS,
  FrameGlobal,
  ProbeBundle,
  ProbeOutcome,
  ProbeSpec,
} from "./types.js";

export function compileProbe(spec: ProbeSpec): (window: FrameGlobal) => unknown {
  // The probe source is a function body over a single `window` binding.
  return new Function("window", spec.probeSource) as (window: FrameGlobal) => unknown;
}

/** Run one probe against a frame global and classify the result. */
export function runProbeOnce(spec: ProbeSpec, frameGlobal: FrameGlobal): ProbeOutcome {
  let value: unknown;
  try {
    value = compileProbe(spec)(frameGlobal);
  } catch (err) {
    return { kind: "error", message: err instanceof Error ? err.message : String(err) };
  }
  if (typeof value === "string" && value.length > 0) {
    return { kind: "version", rawVersion: value };
  }
  if (value === null) {
    return { kind: "name-only" };
  }
  return { kind: "absent" };
}

/** Load every `<library-id>.js` file in a directory as a probe spec. */
export function loadProbeBundle(
  directory: string,
  cadenceMs: number = DEFAULT_CADENCE_MS,
  sink = "line-delimited crawl event log",
): ProbeBundle {
  if (cadenceMs <= 0) {
    throw new Error(`cadence must be positive, got ${cadenceMs}`);
  }
  const probes: ProbeSpec[] = [];
  for (const name of readdirSync(directory).sort()) {
    if (!name.endsWith(".js")) continue;
    const probeSource = readFileSync(join(directory, name), "utf8");
    if (!probeSource.trim()) {
      throw new Error(`empty probe source: ${name}`);
    }
    probes.push({ libraryId: basename(name, ".js"), probeSource });
  }
  return { probes, cadenceMs, sink };
}
