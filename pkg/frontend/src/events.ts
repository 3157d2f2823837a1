/**
 * Emission of probe detections in the crawl event-log line format.
 *
 * The analysis pipeline ingests line-delimited JSON records with a strictly
 * increasing `seq`; probe hits use `kind: "probe_detection"` with
 * `library_id`, optional `raw_version` (omitted = version attribute
 * missing) and optional `node_id` (omitted = unattributed hit).
 */

import { ProbeResult } from "./types.js";

export interface ProbeDetectionRecord {
  seq: number;
  timestamp_ms: number;
  kind: "probe_detection";
  frame_id: string;
  node_id?: string;
  library_id: string;
  raw_version?: string;
}

export function probeEventRecord(result: ProbeResult, seq: number): ProbeDetectionRecord {
  const record: ProbeDetectionRecord = {
    seq,
    timestamp_ms: Math.max(0, Math.round(result.timestampMs)),
    kind: "probe_detection",
    frame_id: result.frameId,
    library_id: result.libraryId,
  };
  if (result.implementingNodeId !== undefined) {
    record.node_id = result.implementingNodeId;
  }
  if (result.rawVersion !== null) {
    record.raw_version = result.rawVersion;
  }
  return record;
}

export function eventLine(record: ProbeDetectionRecord): string {
  return JSON.stringify(record);
}

/**
 * Append-only sink assigning sequence numbers. Each emission produces one
 * whole line, so concurrent per-frame loops writing through a shared sink
 * never interleave partial records.
 */
export class EventSink {
  private seq = 0;
  readonly lines: string[] = [];
  private readonly write?: (line: string) => void;

  constructor(write?: (line: string) => void) {
    this.write = write;
  }

  emit(result: ProbeResult): ProbeDetectionRecord {
    this.seq += 1;
    const record = probeEventRecord(result, this.seq);
    const line = eventLine(record);
    this.lines.push(line);
    this.write?.(line);
    return record;
  }
}
