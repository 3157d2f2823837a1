import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import { EventSink } from "../src/events.js";
import { runProbesInFrame } from "../src/frameRunner.js";
import { ProbeBundle, ProbeResult, ProbeSpec } from "../src/types.js";

const jqueryProbe: ProbeSpec = {
  libraryId: "jquery",
  probeSource: `
    var jq = window.jQuery || window.$;
    if (jq && jq.fn) { return jq.fn.jquery || null; }
    return false;
  `,
};

const throwingProbe: ProbeSpec = {
  libraryId: "broken",
  probeSource: "throw new Error('probe exploded');",
};

const momentProbe: ProbeSpec = {
  libraryId: "moment",
  probeSource: `
    var m = window.moment;
    if (m && typeof m.isMoment === 'function') { return m.version || null; }
    return false;
  `,
};

function bundle(probes: ProbeSpec[], cadenceMs = 4000): ProbeBundle {
  return { probes, cadenceMs, sink: "test sink" };
}

describe("runProbesInFrame", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("runs every probe on each cadence tick and emits hits", () => {
    const frame = {
      frameId: "f1",
      globalObject: { jQuery: { fn: { jquery: "3.1.0" } } },
    };
    const emitted: ProbeResult[] = [];
    const handle = runProbesInFrame(
      bundle([jqueryProbe, momentProbe]),
      frame,
      (r) => emitted.push(r),
    );
    expect(emitted).toHaveLength(0); // nothing before the first tick
    vi.advanceTimersByTime(4000);
    expect(handle.tickCount).toBe(1);
    expect(emitted).toHaveLength(1);
    expect(emitted[0]).toMatchObject({
      frameId: "f1",
      libraryId: "jquery",
      rawVersion: "3.1.0",
    });
    vi.advanceTimersByTime(8000);
    expect(handle.tickCount).toBe(3);
    expect(emitted).toHaveLength(3);
    handle.stop();
    vi.advanceTimersByTime(20000);
    expect(handle.tickCount).toBe(3);
  });

  it("keeps the loop alive when a probe throws", () => {
    const frame = {
      frameId: "f1",
      globalObject: { jQuery: { fn: { jquery: "2.2.4" } } },
    };
    const emitted: ProbeResult[] = [];
    const handle = runProbesInFrame(
      bundle([throwingProbe, jqueryProbe]),
      frame,
      (r) => emitted.push(r),
    );
    vi.advanceTimersByTime(12000);
    expect(handle.errorCount).toBe(3);
    expect(emitted.map((r) => r.libraryId)).toEqual(["jquery", "jquery", "jquery"]);
  });

  it("emits a no-version hit when the guard passes without a version", () => {
    const frame = { frameId: "f2", globalObject: { $: { fn: {} } } };
    const emitted: ProbeResult[] = [];
    runProbesInFrame(bundle([jqueryProbe]), frame, (r) => emitted.push(r));
    vi.advanceTimersByTime(4000);
    expect(emitted).toHaveLength(1);
    expect(emitted[0].rawVersion).toBeNull();
  });

  it("attributes the implementing node only when the runtime resolves it", () => {
    const emitted: ProbeResult[] = [];
    const frame = {
      frameId: "f3",
      globalObject: { jQuery: { fn: { jquery: "1.11.1" } } },
      resolveImplementingNode: (libraryId: string) =>
        libraryId === "jquery" ? "s17" : undefined,
    };
    runProbesInFrame(bundle([jqueryProbe]), frame, (r) => emitted.push(r));
    vi.advanceTimersByTime(4000);
    expect(emitted[0].implementingNodeId).toBe("s17");

    const blind = {
      frameId: "f4",
      globalObject: { jQuery: { fn: { jquery: "1.11.1" } } },
    };
    const blindEmitted: ProbeResult[] = [];
    runProbesInFrame(bundle([jqueryProbe]), blind, (r) => blindEmitted.push(r));
    vi.advanceTimersByTime(4000);
    expect(blindEmitted[0].implementingNodeId).toBeUndefined();
  });

  it("notices a library appearing later (frame navigation)", () => {
    const globalObject: Record<string, unknown> = {};
    const emitted: ProbeResult[] = [];
    runProbesInFrame(
      bundle([jqueryProbe]),
      { frameId: "f5", globalObject },
      (r) => emitted.push(r),
    );
    vi.advanceTimersByTime(4000);
    expect(emitted).toHaveLength(0);
    globalObject.jQuery = { fn: { jquery: "2.2.0" } };
    vi.advanceTimersByTime(4000);
    expect(emitted).toHaveLength(1);
    expect(emitted[0].rawVersion).toBe("2.2.0");
  });

  it("streams through a shared sink with one line per result", () => {
    const sink = new EventSink();
    const frame = {
      frameId: "f6",
      globalObject: { jQuery: { fn: { jquery: "3.1.0" } } },
    };
    const handle = runProbesInFrame(bundle([jqueryProbe]), frame, (r) => sink.emit(r));
    vi.advanceTimersByTime(8000);
    handle.stop();
    expect(sink.lines).toHaveLength(2);
    const records = sink.lines.map((line) => JSON.parse(line));
    expect(records.map((r) => r.seq)).toEqual([1, 2]);
    expect(records[0].kind).toBe("probe_detection");
  });
});
