/**
 * Offline probing: load one script file into a synthetic document and run
 * every probe once.
 *
 * This catches inclusions the in-frame cadence can miss (short-lived
 * frames, replaced globals), but it cannot fully replace in-browser
 * detection: a library with environment prerequisites fails to load in
 * isolation (jQuery-UI without jQuery, Backbone without Underscore), which
 * is counted as a load failure rather than detected.
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";
import { JSDOM } from "jsdom";
import { runProbeOnce } from "./probes.js";
import { ProbeBundle, ProbeResult } from "./types.js";

export interface OfflineCounters {
  loadFailures: number;
  probeErrors: number;
  detected: number;
  nameOnly: number;
}

export interface OfflineRun {
  file: string;
  frameId: string;
  loadError?: string;
  results: ProbeResult[];
  counters: OfflineCounters;
}

export function offlineProbeSource(
  source: string,
  bundle: ProbeBundle,
  label: string,
  timestampMs = 0,
): OfflineRun {
  const frameId = `offline:${label}`;
  const run: OfflineRun = {
    file: label,
    frameId,
    results: [],
    counters: { loadFailures: 0, probeErrors: 0, detected: 0, nameOnly: 0 },
  };
  const dom = new JSDOM("<!doctype html><html><head></head><body></body></html>", {
    runScripts: "outside-only",
    url: `http://offline.harness/${label}`,
    pretendToBeVisual: true,
  });
  try {
    try {
      dom.window.eval(source);
    } catch (err) {
      // environment prerequisite missing or genuinely broken script
      run.counters.loadFailures += 1;
      run.loadError = err instanceof Error ? err.message : String(err);
      return run;
    }
    for (const spec of bundle.probes) {
      const outcome = runProbeOnce(spec, dom.window);
      if (outcome.kind === "error") {
        run.counters.probeErrors += 1;
        continue;
      }
      if (outcome.kind === "absent") {
        continue;
      }
      if (outcome.kind === "version") {
        run.counters.detected += 1;
      } else {
        run.counters.nameOnly += 1;
      }
      run.results.push({
        frameId,
        libraryId: spec.libraryId,
        rawVersion: outcome.kind === "version" ? outcome.rawVersion : null,
        timestampMs,
      });
    }
    return run;
  } finally {
    dom.window.close();
  }
}

export function offlineProbe(
  scriptPath: string,
  bundle: ProbeBundle,
  timestampMs = 0,
): OfflineRun {
  const source = readFileSync(scriptPath, "utf8");
  return offlineProbeSource(source, bundle, basename(scriptPath), timestampMs);
}
