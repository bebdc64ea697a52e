// DOM wiring for the calculator. All state transitions go through
// session.ts; all numbers on screen come from server reports via
// view.ts. Edits debounce into a single in-flight analyze request whose
// response is applied only if it is still the newest (sequence check).

import { analyze, curve, hardwareProfiles, zooEntries, ApiError } from "./api.js";
import { curveChartSvg } from "./chart.js";
import { exportDocument, importDocument, toDocument, ImportError } from "./export.js";
import type { EnergyUnit, MassUnit } from "./format.js";
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
  sessionErrors,
  setDtype,
  setHardware,
  setInputShape,
  setIntensity,
  setName,
  setTraining,
  type UiSession,
} from "./session.js";
import type { DataTypeName, DocumentObj, LayerKind, LayerObj } from "./types.js";
import { summaryView } from "./view.js";

const DEBOUNCE_MS = 250;

function el<T extends HTMLElement>(id: string, ctor: new () => T): T {
  const node = document.getElementById(id);
  if (!(node instanceof ctor)) throw new Error(`missing #${id}`);
  return node;
}

const baseInput = el("base-url", HTMLInputElement);
const nameInput = el("net-name", HTMLInputElement);
const shapeInputs = {
  rows: el("shape-rows", HTMLInputElement),
  cols: el("shape-cols", HTMLInputElement),
  channels: el("shape-channels", HTMLInputElement),
};
const layerTable = el("layer-rows", HTMLTableSectionElement);
const addLayerSelect = el("add-layer-kind", HTMLSelectElement);
const addLayerButton = el("add-layer", HTMLButtonElement);
const hardwareSelect = el("hardware", HTMLSelectElement);
const dtypeSelect = el("dtype", HTMLSelectElement);
const samplesInput = el("samples", HTMLInputElement);
const epochsInput = el("epochs", HTMLInputElement);
const multiplierInput = el("backward-multiplier", HTMLInputElement);
const intensityInput = el("intensity", HTMLInputElement);
const regionInput = el("region", HTMLInputElement);
const energyUnitSelect = el("energy-unit", HTMLSelectElement);
const massUnitSelect = el("mass-unit", HTMLSelectElement);
const summaryBox = el("summary", HTMLDivElement);
const statusBox = el("status", HTMLDivElement);
const zooBox = el("zoo-buttons", HTMLDivElement);
const curveFromInput = el("curve-from", HTMLInputElement);
const curveToInput = el("curve-to", HTMLInputElement);
const curvePointsInput = el("curve-points", HTMLInputElement);
const curveCompareSelect = el("curve-compare", HTMLSelectElement);
const curveBox = el("curve-box", HTMLDivElement);
const curveHint = el("curve-hint", HTMLDivElement);
const exportArea = el("export-area", HTMLTextAreaElement);
const exportButton = el("export-btn", HTMLButtonElement);
const importButton = el("import-btn", HTMLButtonElement);

let session: UiSession = newSession();
let debounceTimer: number | null = null;
const zooDocuments = new Map<string, DocumentObj>();

function base(): string {
  return baseInput.value.replace(/\/$/, "");
}

const NUMERIC_LAYER_FIELDS: ReadonlyArray<keyof LayerObj> = [
  "output_size", "kernel_rows", "kernel_cols", "stride_rows", "stride_cols",
  "pad_rows", "pad_cols", "num_filters",
];

function fieldsFor(kind: LayerKind): ReadonlyArray<keyof LayerObj> {
  switch (kind) {
    case "dense":
      return ["output_size", "use_bias", "activation"];
    case "conv2d":
      return [
        "kernel_rows", "kernel_cols", "stride_rows", "stride_cols",
        "pad_rows", "pad_cols", "num_filters", "use_bias", "activation",
      ];
    case "pool2d":
      return ["kernel_rows", "kernel_cols", "stride_rows", "stride_cols"];
    case "flatten":
      return [];
  }
}

function update(next: UiSession): void {
  session = next;
  renderLayers();
  renderStatus();
  scheduleAnalyze();
}

function scheduleAnalyze(): void {
  if (debounceTimer !== null) window.clearTimeout(debounceTimer);
  debounceTimer = window.setTimeout(() => {
    debounceTimer = null;
    void runAnalyze();
  }, DEBOUNCE_MS);
}

async function runAnalyze(): Promise<void> {
  if (!canSubmit(session)) {
    statusBox.textContent = "fix the highlighted fields to recompute";
    return;
  }
  const issued = beginAnalyze(session);
  session = issued.session;
  statusBox.textContent = "computing...";
  try {
    const report = await analyze(base(), {
      document: toDocument(session.network),
      hardwareId: session.hardwareId,
      dtype: session.dtype,
      training: session.training,
      intensity: session.intensity,
    });
    session = applyReport(session, issued.seq, report);
  } catch (err) {
    if (err instanceof ApiError) {
      session = applyError(session, issued.seq, err.error);
    } else {
      session = applyError(session, issued.seq, {
        code: "network_error",
        message: String(err),
      });
    }
    renderLayers(); // pin server errors to the offending field
  }
  renderSummary();
  renderStatus();
  void runCurve();
}

async function runCurve(): Promise<void> {
  const start = Number(curveFromInput.value);
  const end = Number(curveToInput.value);
  const points = Number(curvePointsInput.value);
  if (!(start >= 1) || !(end >= start) || !(points >= 1)) {
    curveBox.innerHTML = "";
    curveHint.textContent = "enter a valid range (1 <= from <= to) to draw the chart";
    return;
  }
  if (!canSubmit(session)) return;
  try {
    const params = {
      hardwareId: session.hardwareId,
      dtype: session.dtype,
      training: session.training,
      intensity: session.intensity,
      range: { start, end, points },
    };
    const report = await curve(base(), {
      document: toDocument(session.network),
      ...params,
    });
    const series = [{ label: session.network.name, points: report.curve }];
    const overlayDoc = zooDocuments.get(curveCompareSelect.value);
    if (overlayDoc) {
      const overlay = await curve(base(), { document: overlayDoc, ...params });
      series.push({ label: overlayDoc.network.name, points: overlay.curve });
    }
    curveHint.textContent =
      `per prediction: ${report.per_prediction_g} g, one-time training: ${report.training_g} g`;
    curveBox.innerHTML = curveChartSvg(series);
  } catch (err) {
    curveBox.innerHTML = "";
    curveHint.textContent = `curve error: ${(err as Error).message}`;
  }
}

function renderStatus(): void {
  if (session.serverError) {
    statusBox.textContent = `server error (${session.serverError.code}): ${session.serverError.message}`;
    statusBox.className = "status error";
    return;
  }
  statusBox.className = "status";
  statusBox.textContent = session.dirty ? "edited; recomputing..." : "up to date";
}

function renderSummary(): void {
  const report = session.report;
  if (!report) {
    summaryBox.innerHTML = "<p>no report yet</p>";
    return;
  }
  const view = summaryView(
    report,
    energyUnitSelect.value as EnergyUnit,
    massUnitSelect.value as MassUnit,
  );
  const rows = view.layers
    .map(
      (layer) =>
        `<tr><td>${layer.index}</td><td>${layer.kind}</td><td class="num">${layer.flops}</td>` +
        `<td class="num">${layer.macs}</td><td class="num">${layer.weights}</td>` +
        `<td>${layer.outputShape}</td></tr>`,
    )
    .join("");
  const warnings = view.warnings.length
    ? `<ul class="warnings">${view.warnings.map((w) => `<li>${w}</li>`).join("")}</ul>`
    : "";
  summaryBox.innerHTML = `
    <table class="layers"><thead>
      <tr><th>#</th><th>layer</th><th>FLOPs</th><th>MACs</th><th>weights</th><th>output</th></tr>
    </thead><tbody>${rows}</tbody></table>
    <p class="totals"><strong id="total-mflops">${view.mflops}</strong>
      (${view.totalFlops} FLOPs, ${view.totalMacs} MACs, ${view.totalWeights} weights)</p>
    <p>efficiency ${view.efficiency}</p>
    <p>energy: forward ${view.eForward}, backward ${view.eBackward},
       training <strong id="training-energy">${view.eTraining}</strong>,
       per prediction ${view.ePerPrediction}</p>
    <p>carbon: training <strong id="training-co2">${view.carbonTraining}</strong>,
       per prediction <span id="prediction-co2">${view.carbonPerPrediction}</span></p>
    ${warnings}`;
}

function layerInput(
  index: number,
  layer: LayerObj,
  field: keyof LayerObj,
  error: string | undefined,
): string {
  const id = `layer-${index}-${field}`;
  const err = error ? ` field-error" title="${error}` : "";
  if (field === "use_bias") {
    const checked = layer.use_bias !== false ? " checked" : "";
    return `<label class="field${err}">${field}
      <input type="checkbox" data-index="${index}" data-field="${field}" id="${id}"${checked}></label>`;
  }
  if (field === "activation") {
    const options = ["none", "relu", "leaky_relu"]
      .map((a) => `<option value="${a}"${layer.activation === a ? " selected" : ""}>${a}</option>`)
      .join("");
    return `<label class="field${err}">${field}
      <select data-index="${index}" data-field="${field}" id="${id}">${options}</select></label>`;
  }
  const value = layer[field];
  return `<label class="field${err}">${field}
    <input type="number" min="0" step="1" data-index="${index}" data-field="${field}"
      id="${id}" value="${value === undefined ? "" : String(value)}"></label>`;
}

function renderLayers(): void {
  const errors = sessionErrors(session);
  const pinned = session.serverError ? serverErrorTarget(session.serverError) : null;
  layerTable.innerHTML = session.network.layers
    .map((layer, index) => {
      const layerErrors = new Map(
        (errors.layers[index] ?? []).map((e) => [e.field, e.message]),
      );
      if (pinned && pinned.index === index && !layerErrors.has(pinned.field)) {
        layerErrors.set(pinned.field, session.serverError!.message);
      }
      const fields = fieldsFor(layer.kind)
        .map((field) => layerInput(index, layer, field, layerErrors.get(field)))
        .join("");
      const errorText = layerErrors.size
        ? `<div class="row-errors">${[...layerErrors.entries()]
            .map(([field, message]) => `${field}: ${message}`)
            .join("; ")}</div>`
        : "";
      return `<tr><td class="kind">${index} ${layer.kind}</td>
        <td>${fields}${errorText}</td>
        <td><button data-remove="${index}" class="remove">x</button></td></tr>`;
    })
    .join("");

  for (const input of layerTable.querySelectorAll<HTMLInputElement>("input[data-field]")) {
    input.addEventListener("change", onLayerEdit);
  }
  for (const select of layerTable.querySelectorAll<HTMLSelectElement>("select[data-field]")) {
    select.addEventListener("change", onLayerEdit);
  }
  for (const button of layerTable.querySelectorAll<HTMLButtonElement>("button[data-remove]")) {
    button.addEventListener("click", () => {
      update(removeLayer(session, Number(button.dataset.remove)));
    });
  }
}

function onLayerEdit(event: Event): void {
  const target = event.target as HTMLInputElement | HTMLSelectElement;
  const index = Number(target.dataset.index);
  const field = target.dataset.field as keyof LayerObj;
  let value: number | boolean | string | undefined;
  if (target instanceof HTMLInputElement && target.type === "checkbox") {
    value = target.checked;
  } else if (NUMERIC_LAYER_FIELDS.includes(field)) {
    value = target.value === "" ? undefined : Number(target.value);
  } else {
    value = target.value;
  }
  update(editLayer(session, index, field, value));
}

function bindInputs(): void {
  nameInput.addEventListener("change", () => update(setName(session, nameInput.value)));
  for (const [key, input] of Object.entries(shapeInputs)) {
    input.addEventListener("change", () => {
      update(
        setInputShape(session, {
          ...session.network.input_shape,
          [key]: Number(input.value),
        }),
      );
    });
  }
  hardwareSelect.addEventListener("change", () =>
    update(setHardware(session, hardwareSelect.value)),
  );
  dtypeSelect.addEventListener("change", () =>
    update(setDtype(session, dtypeSelect.value as DataTypeName)),
  );
  const trainingChanged = () =>
    update(
      setTraining(session, {
        training_samples: Number(samplesInput.value),
        epochs: Number(epochsInput.value),
        backward_multiplier: Number(multiplierInput.value),
      }),
    );
  samplesInput.addEventListener("change", trainingChanged);
  epochsInput.addEventListener("change", trainingChanged);
  multiplierInput.addEventListener("change", trainingChanged);
  const intensityChanged = () =>
    update(
      setIntensity(session, {
        grams_co2eq_per_kwh: Number(intensityInput.value),
        region_label: regionInput.value,
      }),
    );
  intensityInput.addEventListener("change", intensityChanged);
  regionInput.addEventListener("change", intensityChanged);
  energyUnitSelect.addEventListener("change", renderSummary);
  massUnitSelect.addEventListener("change", renderSummary);
  addLayerButton.addEventListener("click", () =>
    update(addLayer(session, addLayerSelect.value as LayerKind)),
  );
  for (const input of [curveFromInput, curveToInput, curvePointsInput]) {
    input.addEventListener("change", () => void runCurve());
  }
  curveCompareSelect.addEventListener("change", () => void runCurve());
  exportButton.addEventListener("click", () => {
    exportArea.value = exportDocument(session.network);
  });
  importButton.addEventListener("click", () => {
    try {
      const document_ = importDocument(exportArea.value);
      update(loadDocument(session, document_));
      nameInput.value = session.network.name;
      shapeInputs.rows.value = String(session.network.input_shape.rows);
      shapeInputs.cols.value = String(session.network.input_shape.cols);
      shapeInputs.channels.value = String(session.network.input_shape.channels);
      statusBox.textContent = "imported";
    } catch (err) {
      if (err instanceof ImportError) {
        statusBox.textContent = `import failed: ${err.message}`;
        statusBox.className = "status error";
      } else {
        throw err;
      }
    }
  });
}

async function populateDatabases(): Promise<void> {
  try {
    const profiles = await hardwareProfiles(base());
    hardwareSelect.innerHTML = profiles
      .map((p) => `<option value="${p.id}">${p.id} (${p.architecture})</option>`)
      .join("");
    hardwareSelect.value = session.hardwareId;
  } catch (err) {
    statusBox.textContent = `cannot reach service at ${base()}: ${(err as Error).message}`;
    statusBox.className = "status error";
    return;
  }
  const entries = await zooEntries(base());
  zooBox.innerHTML = "";
  zooDocuments.clear();
  curveCompareSelect.innerHTML = '<option value="">no overlay</option>';
  for (const entry of entries) {
    zooDocuments.set(entry.id, entry.document);
    const option = document.createElement("option");
    option.value = entry.id;
    option.textContent = `overlay ${entry.id}`;
    curveCompareSelect.appendChild(option);
    const button = document.createElement("button");
    button.textContent = `load ${entry.id}`;
    button.title = entry.provenance;
    button.addEventListener("click", () => {
      update(loadDocument(session, entry.document));
      nameInput.value = session.network.name;
      shapeInputs.rows.value = String(session.network.input_shape.rows);
      shapeInputs.cols.value = String(session.network.input_shape.cols);
      shapeInputs.channels.value = String(session.network.input_shape.channels);
    });
    zooBox.appendChild(button);
  }
}

function initFormDefaults(): void {
  nameInput.value = session.network.name;
  shapeInputs.rows.value = String(session.network.input_shape.rows);
  shapeInputs.cols.value = String(session.network.input_shape.cols);
  shapeInputs.channels.value = String(session.network.input_shape.channels);
  samplesInput.value = String(session.training.training_samples);
  epochsInput.value = String(session.training.epochs);
  multiplierInput.value = String(session.training.backward_multiplier);
  intensityInput.value = String(session.intensity.grams_co2eq_per_kwh);
  regionInput.value = session.intensity.region_label;
  dtypeSelect.value = session.dtype;
}

export async function start(): Promise<void> {
  initFormDefaults();
  bindInputs();
  await populateDatabases();
  renderLayers();
  scheduleAnalyze();
}

if (typeof document !== "undefined" && document.getElementById("base-url")) {
  void start();
}
