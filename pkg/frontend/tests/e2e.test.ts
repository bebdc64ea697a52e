// End-to-end acceptance against a live service: spawns `nncost serve`,
// loads the worked example from the zoo endpoint, and checks the three
// release criteria (0.312 MFLOPs display, CO2 doubling with intensity,
// lossless export/import round trip).

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";

import { analyze, curve, zooEntries } from "../src/api.js";
import { exportDocument, importDocument } from "../src/export.js";
import { formatMflops } from "../src/format.js";
import { summaryView } from "../src/view.js";
import {
  applyReport,
  beginAnalyze,
  loadDocument,
  newSession,
  setIntensity,
  type UiSession,
} from "../src/session.js";
import { toDocument } from "../src/export.js";
import type { AnalysisReport } from "../src/types.js";

const PORT = 18000 + (process.pid % 2000);
const BASE = `http://127.0.0.1:${PORT}/api/v1`;

let server: ChildProcess;

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error(`service did not come up on port ${PORT}`);
}

async function analyzeSession(session: UiSession): Promise<{ session: UiSession; report: AnalysisReport }> {
  const issued = beginAnalyze(session);
  const report = await analyze(BASE, {
    document: toDocument(issued.session.network),
    hardwareId: issued.session.hardwareId,
    dtype: issued.session.dtype,
    training: issued.session.training,
    intensity: issued.session.intensity,
  });
  return { session: applyReport(issued.session, issued.seq, report), report };
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "nncost", "serve", "--port", String(PORT)], {
    cwd: "..",
    stdio: "ignore",
  });
  await waitForHealth();
}, 30000);

afterAll(() => {
  server.kill();
});

describe("worked example end to end", () => {
  it("loaded from the zoo, displays 0.312 MFLOPs", async () => {
    const entries = await zooEntries(BASE);
    const worked = entries.find((e) => e.id === "worked-example-3layer");
    expect(worked).toBeDefined();

    let session = loadDocument(newSession(), worked!.document);
    const result = await analyzeSession(session);
    session = result.session;

    expect(result.report.cost.total_flops).toBe(312532);
    const view = summaryView(result.report, "J", "g");
    expect(view.mflops).toBe("0.312 MFLOPs");
    expect(formatMflops(result.report.cost.mflops)).toBe("0.312");
    expect(session.dirty).toBe(false);
  });

  it("doubling the intensity doubles displayed CO2 and leaves FLOPs unchanged", async () => {
    const entries = await zooEntries(BASE);
    const worked = entries.find((e) => e.id === "worked-example-3layer")!;
    let session = loadDocument(newSession(), worked.document);

    const first = await analyzeSession(session);
    session = setIntensity(first.session, {
      grams_co2eq_per_kwh: first.session.intensity.grams_co2eq_per_kwh * 2,
      region_label: first.session.intensity.region_label,
    });
    const second = await analyzeSession(session);

    expect(second.report.cost.total_flops).toBe(first.report.cost.total_flops);
    // response payloads carry six significant digits, so doubling holds
    // at payload precision (each value quantized to <= 5e-7 relative)
    const ratio = second.report.carbon.training_g / first.report.carbon.training_g;
    expect(Math.abs(ratio - 2.0)).toBeLessThan(2e-5);
    const viewFirst = summaryView(first.report, "J", "g");
    const viewSecond = summaryView(second.report, "J", "g");
    const displayedRatio =
      viewSecond.sources.carbonTraining / viewFirst.sources.carbonTraining;
    expect(Math.abs(displayedRatio - 2.0)).toBeLessThan(2e-5);
    expect(viewSecond.totalFlops).toBe(viewFirst.totalFlops);
  });

  it("export then import reproduces the identical document", async () => {
    const entries = await zooEntries(BASE);
    const worked = entries.find((e) => e.id === "worked-example-3layer")!;
    const session = loadDocument(newSession(), worked.document);

    const exported = exportDocument(session.network);
    const imported = importDocument(exported);
    expect(imported).toEqual(toDocument(session.network));

    // the re-imported document analyzes to the same server report payload
    const before = await analyzeSession(session);
    const after = await analyzeSession(loadDocument(newSession(), imported));
    expect(after.report.cost).toEqual(before.report.cost);
  });

  it("curve endpoint feeds a monotone log chart with the 7.4e9 marker", async () => {
    const entries = await zooEntries(BASE);
    const worked = entries.find((e) => e.id === "worked-example-3layer")!;
    const session = loadDocument(newSession(), worked.document);

    const report = await curve(BASE, {
      document: toDocument(session.network),
      hardwareId: session.hardwareId,
      dtype: session.dtype,
      training: session.training,
      intensity: session.intensity,
      range: { start: 1, end: 7400000000, points: 10 },
    });
    const grams = report.curve.map((p) => p.grams);
    expect([...grams].sort((a, b) => a - b)).toEqual(grams);
    const marked = report.curve.filter((p) => p.marker === "mobile-users-2025");
    expect(marked).toHaveLength(1);
    expect(marked[0]!.predictions).toBe(7400000000);
  });

  it("overlaying two zoo models keeps their curves ordered by total FLOPs at every x", async () => {
    const entries = await zooEntries(BASE);
    const params = {
      hardwareId: "nvidia-a100" as const,
      dtype: "fp32" as const,
      training: { training_samples: 10, epochs: 1, backward_multiplier: 2 },
      intensity: { grams_co2eq_per_kwh: 250, region_label: "x" },
      range: { start: 1, end: 1000000, points: 6 },
    };
    const [first, second] = await Promise.all(
      entries.map((entry) => curve(BASE, { document: entry.document, ...params })),
    );
    expect(first!.curve.map((p) => p.predictions)).toEqual(
      second!.curve.map((p) => p.predictions),
    );
    const firstIsCostlier = first!.total_flops > second!.total_flops;
    for (let i = 0; i < first!.curve.length; i++) {
      const a = first!.curve[i]!.grams;
      const b = second!.curve[i]!.grams;
      expect(a > b).toBe(firstIsCostlier);
    }
  });

  it("server-side validation errors surface as typed error objects", async () => {
    const entries = await zooEntries(BASE);
    const worked = entries.find((e) => e.id === "worked-example-3layer")!;
    const document = structuredClone(worked.document);
    (document.network.layers[1] as { stride_rows?: number }).stride_rows = 0;
    await expect(
      analyze(BASE, {
        document,
        hardwareId: "nvidia-a100",
        dtype: "fp32",
        training: { training_samples: 10, epochs: 1, backward_multiplier: 2 },
        intensity: { grams_co2eq_per_kwh: 250, region_label: "x" },
      }),
    ).rejects.toMatchObject({ error: { code: "validation_error" } });
  });
});
