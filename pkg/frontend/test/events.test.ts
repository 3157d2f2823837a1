/**
 * Event emission: the records must be exactly what the analysis pipeline
 * ingests. Shape-checked here, then round-tripped through the pipeline's
 * own schema validator as a cross-check.
 */

import { describe, expect, it } from "vitest";
import { spawnSync } from "node:child_process";
import { join } from "node:path";
import { EventSink, eventLine, probeEventRecord } from "../src/events.js";
import { offlineProbe } from "../src/offline.js";
import { loadProbeBundle } from "../src/probes.js";
import { ProbeResult } from "../src/types.js";

const REPO_ROOT = join(__dirname, "..", "..");

function result(overrides: Partial<ProbeResult> = {}): ProbeResult {
  return {
    frameId: "f1",
    libraryId: "jquery",
    rawVersion: "3.1.0",
    timestampMs: 4000,
    ...overrides,
  };
}

describe("probeEventRecord", () => {
  it("produces the pipeline's field names", () => {
    const record = probeEventRecord(result({ implementingNodeId: "s17" }), 7);
    expect(record).toEqual({
      seq: 7,
      timestamp_ms: 4000,
      kind: "probe_detection",
      frame_id: "f1",
      node_id: "s17",
      library_id: "jquery",
      raw_version: "3.1.0",
    });
  });

  it("omits node_id for unattributed hits and raw_version for name-only", () => {
    const record = probeEventRecord(result({ rawVersion: null }), 1);
    expect(record).not.toHaveProperty("node_id");
    expect(record).not.toHaveProperty("raw_version");
  });

  it("clamps negative timestamps to zero", () => {
    expect(probeEventRecord(result({ timestampMs: -5 }), 1).timestamp_ms).toBe(0);
  });
});

describe("EventSink", () => {
  it("assigns strictly increasing sequence numbers", () => {
    const sink = new EventSink();
    sink.emit(result());
    sink.emit(result({ libraryId: "moment", rawVersion: "2.29.4" }));
    const seqs = sink.lines.map((line) => JSON.parse(line).seq);
    expect(seqs).toEqual([1, 2]);
  });

  it("writes whole lines to the provided writer", () => {
    const written: string[] = [];
    const sink = new EventSink((line) => written.push(line));
    const record = sink.emit(result());
    expect(written).toEqual([eventLine(record)]);
  });
});

describe("cross-check against the analysis pipeline schema", () => {
  it("emitted events pass the pipeline's own validator", () => {
    const bundle = loadProbeBundle(join(REPO_ROOT, "probes"));
    const sink = new EventSink();
    const files = [
      "jquery-3.1.0.min.js",
      "lodash-4.17.21.min.js",
      "zepto-1.2.0.min.js",
    ];
    for (const file of files) {
      const run = offlineProbe(join(__dirname, "..", "fixtures", "libs", file), bundle);
      for (const r of run.results) sink.emit(r);
    }
    expect(sink.lines.length).toBe(3);

    const proc = spawnSync(
      "python3",
      ["-m", "weblibs.cli", "events", "validate", "-"],
      {
        input: sink.lines.join("\n") + "\n",
        encoding: "utf8",
        env: { ...process.env, PYTHONPATH: join(REPO_ROOT, "src") },
      },
    );
    expect(proc.error).toBeUndefined();
    expect(proc.status, proc.stderr).toBe(0);
    const summary = JSON.parse(proc.stdout);
    expect(summary.events).toBe(3);
    expect(summary.kinds).toEqual({ probe_detection: 3 });
  });
});
