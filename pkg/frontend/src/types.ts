/**
 * Core probe types.
 *
 * A probe is a function body executed inside a frame's script scope. Its
 * contract: return the library's version string when the library and its
 * version attribute exist, `null` when the library's global (and guard
 * attribute) is present but no version attribute exists, and `false` or
 * `undefined` when the library is absent.
 */

export interface ProbeSpec {
  libraryId: string;
  probeSource: string;
}

export interface ProbeBundle {
  probes: ProbeSpec[];
  /** Polling interval for the in-frame loop. */
  cadenceMs: number;
  /** Human description of where emitted events go. */
  sink: string;
}

export const DEFAULT_CADENCE_MS = 4000;

export type ProbeOutcome =
  | { kind: "version"; rawVersion: string }
  | { kind: "name-only" }
  | { kind: "absent" }
  | { kind: "error"; message: string };

export interface ProbeResult {
  frameId: string;
  libraryId: string;
  /** null = library present, version attribute missing. */
  rawVersion: string | null;
  /** Only set when the runtime exposes script provenance. */
  implementingNodeId?: string;
  timestampMs: number;
}

/** A window-like object a probe runs against. */
export type FrameGlobal = unknown;
