/**
 * Offline harness acceptance: over a fixture set of real library files,
 * every file whose version attribute exists is identified by name and
 * version, name-only misses are counted, and dependency-bound files fail
 * to load in isolation and are counted as such.
 */

import { describe, expect, it } from "vitest";
import { join } from "node:path";
import { offlineProbe, offlineProbeSource } from "../src/offline.js";
import { loadProbeBundle } from "../src/probes.js";

const PROBES_DIR = join(__dirname, "..", "..", "probes");
const LIBS_DIR = join(__dirname, "..", "fixtures", "libs");

const bundle = loadProbeBundle(PROBES_DIR);

const DETECTABLE: Array<[string, string, string]> = [
  ["jquery-1.11.1.min.js", "jquery", "1.11.1"],
  ["jquery-2.2.0.min.js", "jquery", "2.2.0"],
  ["jquery-2.2.4.min.js", "jquery", "2.2.4"],
  ["jquery-3.1.0.min.js", "jquery", "3.1.0"],
  ["lodash-4.17.21.min.js", "lodash", "4.17.21"],
  ["lodash-3.10.1.js", "lodash", "3.10.1"],
  ["underscore-1.8.3.min.js", "underscore", "1.8.3"],
  ["underscore-1.13.6.min.js", "underscore", "1.13.6"],
  ["handlebars-4.7.7.min.js", "handlebars", "4.7.7"],
  ["moment-2.29.4.min.js", "moment", "2.29.4"],
];

describe("offlineProbe over the real-library fixture set", () => {
  it("covers at least 10 files spanning at least 3 libraries", () => {
    expect(DETECTABLE.length).toBeGreaterThanOrEqual(10);
    const libraries = new Set(DETECTABLE.map(([, lib]) => lib));
    expect(libraries.size).toBeGreaterThanOrEqual(3);
  });

  it.each(DETECTABLE)(
    "identifies %s as %s %s",
    (file, library, version) => {
      const run = offlineProbe(join(LIBS_DIR, file), bundle);
      expect(run.loadError).toBeUndefined();
      const versioned = run.results.filter((r) => r.rawVersion !== null);
      expect(versioned).toHaveLength(1);
      expect(versioned[0].libraryId).toBe(library);
      expect(versioned[0].rawVersion).toBe(version);
      expect(run.counters.detected).toBe(1);
      expect(run.counters.loadFailures).toBe(0);
    },
  );

  it("counts a jQuery-UI file alone as a dependency load failure", () => {
    const run = offlineProbe(join(LIBS_DIR, "jquery-ui-1.13.2.min.js"), bundle);
    expect(run.counters.loadFailures).toBe(1);
    expect(run.loadError).toMatch(/jQuery/);
    expect(run.results).toHaveLength(0);
  });

  it("counts a Backbone file alone as a dependency load failure", () => {
    const run = offlineProbe(join(LIBS_DIR, "backbone-1.3.3.min.js"), bundle);
    expect(run.counters.loadFailures).toBe(1);
    expect(run.results).toHaveLength(0);
  });

  it("counts the Zepto lookalike as a name-only jquery miss", () => {
    const run = offlineProbe(join(LIBS_DIR, "zepto-1.2.0.min.js"), bundle);
    expect(run.loadError).toBeUndefined();
    expect(run.counters.nameOnly).toBe(1);
    expect(run.counters.detected).toBe(0);
    expect(run.results).toHaveLength(1);
    expect(run.results[0].libraryId).toBe("jquery");
    expect(run.results[0].rawVersion).toBeNull();
  });

  it("yields no results for an empty file", () => {
    const run = offlineProbeSource("", bundle, "empty.js");
    expect(run.results).toHaveLength(0);
    expect(run.counters).toEqual({
      loadFailures: 0,
      probeErrors: 0,
      detected: 0,
      nameOnly: 0,
    });
  });

  it("tallies the whole corpus the way the summary reports it", () => {
    let detected = 0;
    let nameOnly = 0;
    let loadFailures = 0;
    const files = [
      ...DETECTABLE.map(([f]) => f),
      "jquery-ui-1.13.2.min.js",
      "backbone-1.3.3.min.js",
      "zepto-1.2.0.min.js",
    ];
    for (const file of files) {
      const run = offlineProbe(join(LIBS_DIR, file), bundle);
      detected += run.counters.detected;
      nameOnly += run.counters.nameOnly;
      loadFailures += run.counters.loadFailures;
    }
    expect(detected).toBe(10);
    expect(nameOnly).toBe(1);
    expect(loadFailures).toBe(2);
  });
});
