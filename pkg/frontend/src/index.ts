export { EventSink, eventLine, probeEventRecord } from "./events.js";
export type { ProbeDetectionRecord } from "./events.js";
export { runProbesInFrame } from "./frameRunner.js";
export type { FrameContext, ProbeLoopHandle } from "./frameRunner.js";
export { offlineProbe, offlineProbeSource } from "./offline.js";
export type { OfflineCounters, OfflineRun } from "./offline.js";
export { compileProbe, loadProbeBundle, runProbeOnce } from "./probes.js";
export { DEFAULT_CADENCE_MS } from "./types.js";
export type {
  FrameGlobal,
  ProbeBundle,
  ProbeOutcome,
  ProbeResult,
  ProbeSpec,
} from "./types.js";
