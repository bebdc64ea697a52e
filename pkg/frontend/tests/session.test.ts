import { describe, expect, it } from "vitest";

import {
  addLayer,
  applyError,
  applyReport,
  beginAnalyze,
  canSubmit,
  editLayer,
  loadDocument,
  newSession,
  removeLayer,
  serverErrorTarget,
  setIntensity,
} from "../src/session.js";
import type { AnalysisReport } from "../src/types.js";

function fakeReport(totalFlops: number): AnalysisReport {
  return { cost: { total_flops: totalFlops } } as unknown as AnalysisReport;
}

describe("session editing", () => {
  it("starts dirty with a submittable default network", () => {
    const session = newSession();
    expect(session.dirty).toBe(true);
    expect(canSubmit(session)).toBe(true);
  });

  it("editLayer updates one field immutably and marks dirty", () => {
    let session = newSession();
    session = applyReport(beginAnalyze(session).session, 1, fakeReport(1));
    expect(session.dirty).toBe(false);
    const edited = editLayer(session, 0, "output_size", 99);
    expect(edited.network.layers[0]!.output_size).toBe(99);
    expect(edited.dirty).toBe(true);
    expect(session.network.layers[0]!.output_size).not.toBe(99);
  });

  it("an invalid field blocks submission (no request would be sent)", () => {
    const session = editLayer(newSession(), 0, "output_size", 0);
    expect(canSubmit(session)).toBe(false);
  });

  it("add/remove layers", () => {
    let session = newSession();
    session = addLayer(session, "conv2d", 0);
    expect(session.network.layers.map((l) => l.kind)).toEqual(["conv2d", "dense"]);
    session = removeLayer(session, 1);
    expect(session.network.layers.map((l) => l.kind)).toEqual(["conv2d"]);
  });

  it("loadDocument replaces the working network", () => {
    const session = loadDocument(newSession(), {
      format_version: "1",
      kind: "network",
      network: {
        name: "loaded",
        input_shape: { rows: 8, cols: 8, channels: 2 },
        layers: [{ kind: "flatten" }],
      },
    });
    expect(session.network.name).toBe("loaded");
    expect(session.network.layers).toEqual([{ kind: "flatten" }]);
    expect(session.dirty).toBe(true);
  });
});

describe("request sequencing", () => {
  it("applies the newest response and clears dirty", () => {
    let session = newSession();
    const issued = beginAnalyze(session);
    session = applyReport(issued.session, issued.seq, fakeReport(42));
    expect(session.report?.cost.total_flops).toBe(42);
    expect(session.dirty).toBe(false);
  });

  it("discards out-of-order responses by sequence number", () => {
    let session = newSession();
    const first = beginAnalyze(session);
    const second = beginAnalyze(first.session);
    session = second.session;
    // the newer request resolves first
    session = applyReport(session, second.seq, fakeReport(2));
    // the stale response must be ignored
    session = applyReport(session, first.seq, fakeReport(1));
    expect(session.report?.cost.total_flops).toBe(2);
  });

  it("discards stale errors too", () => {
    let session = newSession();
    const first = beginAnalyze(session);
    const second = beginAnalyze(first.session);
    session = applyReport(second.session, second.seq, fakeReport(2));
    session = applyError(session, first.seq, { code: "shape_error", message: "old" });
    expect(session.serverError).toBeNull();
  });

  it("records errors for the current request", () => {
    let session = newSession();
    const issued = beginAnalyze(session);
    session = applyError(issued.session, issued.seq, {
      code: "validation_error",
      message: "stride",
    });
    expect(session.serverError?.code).toBe("validation_error");
  });

  it("parameter edits reset the server error", () => {
    let session = newSession();
    const issued = beginAnalyze(session);
    session = applyError(issued.session, issued.seq, { code: "x", message: "y" });
    session = setIntensity(session, { grams_co2eq_per_kwh: 500, region_label: "r" });
    expect(session.serverError).toBeNull();
    expect(session.dirty).toBe(true);
  });
});

describe("serverErrorTarget", () => {
  it("pins layer-scoped validation messages to their field", () => {
    const target = serverErrorTarget({
      code: "validation_error",
      message: "layer 2 (pool2d): stride_rows must be >= 1, got 0",
    });
    expect(target).toEqual({ index: 2, field: "stride_rows" });
  });

  it("maps shape-error axis wording onto the kernel field", () => {
    const target = serverErrorTarget({
      code: "shape_error",
      message: "layer 1 (conv2d): row kernel 9 exceeds padded input extent 4",
    });
    expect(target).toEqual({ index: 1, field: "kernel_rows" });
  });

  it("returns null for messages without a layer scope or known field", () => {
    expect(
      serverErrorTarget({ code: "domain_error", message: "epochs must be >= 1" }),
    ).toBeNull();
    expect(
      serverErrorTarget({ code: "shape_error", message: "layer 0 (conv2d): computed thing" }),
    ).toBeNull();
  });
});
