/**
 * Per-frame probe loop.
 *
 * Frames get their own JavaScript scope and may hold independent library
 * instances, and a frame can navigate away at any moment, unloading
 * whatever was detected before. The loop therefore re-runs every probe on
 * a fixed cadence and emits a result per hit; a single probe throwing must
 * never take the loop down.
 */

import { runProbeOnce } from "./probes.js";
import { FrameGlobal, ProbeBundle, ProbeResult } from "./types.js";

export interface FrameContext {
  frameId: string;
  globalObject: FrameGlobal;
  /**
   * Resolve the script element implementing a detected library, when the
   * runtime exposes provenance (a devtools-backed host can; a plain
   * content script usually cannot). Absent or returning undefined leaves
   * the hit unattributed.
   */
  resolveImplementingNode?: (libraryId: string) => string | undefined;
  now?: () => number;
  setInterval?: (fn: () => void, ms: number) => unknown;
  clearInterval?: (handle: unknown) => void;
}

export interface ProbeLoopHandle {
  stop(): void;
  readonly tickCount: number;
  readonly errorCount: number;
  readonly emittedCount: number;
}

export function runProbesInFrame(
  bundle: ProbeBundle,
  frame: FrameContext,
  emit: (result: ProbeResult) => void,
): ProbeLoopHandle {
  const now = frame.now ?? Date.now;
  const schedule = frame.setInterval ?? ((fn, ms) => setInterval(fn, ms));
  const cancel = frame.clearInterval ?? ((handle) => clearInterval(handle as never));

  const state = { ticks: 0, errors: 0, emitted: 0, stopped: false };

  const tick = (): void => {
    if (state.stopped) return;
    state.ticks += 1;
    for (const spec of bundle.probes) {
      const outcome = runProbeOnce(spec, frame.globalObject);
      if (outcome.kind === "error") {
        state.errors += 1;
        continue;
      }
      if (outcome.kind === "absent") {
        continue;
      }
      const result: ProbeResult = {
        frameId: frame.frameId,
        libraryId: spec.libraryId,
        rawVersion: outcome.kind === "version" ? outcome.rawVersion : null,
        timestampMs: now(),
      };
      const node = frame.resolveImplementingNode?.(spec.libraryId);
      if (node !== undefined) {
        result.implementingNodeId = node;
      }
      state.emitted += 1;
      emit(result);
    }
  };

  const handle = schedule(tick, bundle.cadenceMs);
  return {
    stop() {
      if (!state.stopped) {
        state.stopped = true;
        cancel(handle);
      }
    },
    get tickCount() {
      return state.ticks;
    },
    get errorCount() {
      return state.errors;
    },
    get emittedCount() {
      return state.emitted;
    },
  };
}
