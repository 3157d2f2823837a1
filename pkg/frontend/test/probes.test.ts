import { describe, expect, it } from "vitest";
import { join } from "node:path";
import { loadProbeBundle, runProbeOnce } from "../src/probes.js";
import { ProbeSpec } from "../src/types.js";

const PROBES_DIR = join(__dirname, "..", "..", "probes");

const jquerySpec = (): ProbeSpec => {
  const bundle = loadProbeBundle(PROBES_DIR);
  const spec = bundle.probes.find((p) => p.libraryId === "jquery");
  if (!spec) throw new Error("jquery probe missing");
  return spec;
};

describe("loadProbeBundle", () => {
  it("loads one spec per probe file with the default cadence", () => {
    const bundle = loadProbeBundle(PROBES_DIR);
    const ids = bundle.probes.map((p) => p.libraryId);
    expect(ids).toContain("jquery");
    expect(ids).toContain("jquery-ui");
    expect(ids).toContain("moment");
    expect(bundle.cadenceMs).toBe(4000);
    for (const spec of bundle.probes) {
      expect(spec.probeSource.trim().length).toBeGreaterThan(0);
    }
  });

  it("rejects a non-positive cadence", () => {
    expect(() => loadProbeBundle(PROBES_DIR, 0)).toThrow(/cadence/);
  });
});

describe("runProbeOnce", () => {
  it("returns the version when the library and version attribute exist", () => {
    const frame = { jQuery: { fn: { jquery: "3.1.0" } } };
    expect(runProbeOnce(jquerySpec(), frame)).toEqual({
      kind: "version",
      rawVersion: "3.1.0",
    });
  });

  it("returns name-only when the guard passes but the version is missing", () => {
    const frame = { $: { fn: {} } };
    expect(runProbeOnce(jquerySpec(), frame)).toEqual({ kind: "name-only" });
  });

  it("returns absent when the global exists without the guard attribute", () => {
    // a $ that is not a jQuery-like object must not count as a detection
    const frame = { $: function select() {} };
    expect(runProbeOnce(jquerySpec(), frame)).toEqual({ kind: "absent" });
  });

  it("returns absent on an empty frame", () => {
    expect(runProbeOnce(jquerySpec(), {})).toEqual({ kind: "absent" });
  });

  it("reports a lookalike defining the guard attribute (known misfire)", () => {
    // partially-compatible stand-in: fn exists, no version attribute
    const frame = { $: { fn: { concat: () => [] } }, Zepto: {} };
    expect(runProbeOnce(jquerySpec(), frame)).toEqual({ kind: "name-only" });
  });

  it("classifies a throwing probe as an error, not a crash", () => {
    const spec: ProbeSpec = { libraryId: "boom", probeSource: "throw new Error('nope');" };
    const outcome = runProbeOnce(spec, {});
    expect(outcome.kind).toBe("error");
  });
});
