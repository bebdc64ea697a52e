// Session state and transitions. Pure functions over immutable session
// values so every rule (dirty flag, request sequencing, validation
// gating) is unit-testable without a DOM.
//
// Concurrency contract: at most one analyze request is considered
// current; each issued request gets a monotonically increasing sequence
// number and a response is applied only if it carries the latest one,
// so out-of-order arrivals are discarded.

import type {
  AnalysisReport,
  DataTypeName,
  DocumentObj,
  InputShape,
  LayerKind,
  LayerObj,
  NetworkObj,
  TrainingObj,
  IntensityObj,
  ServiceError,
} from "./types.js";
import {
  hasErrors,
  validateInputShape,
  validateLayer,
  validateName,
  type SessionErrors,
} from "./validate.js";

export interface UiSession {
  network: NetworkObj;
  hardwareId: string;
  dtype: DataTypeName;
  training: TrainingObj;
  intensity: IntensityObj;
  report: AnalysisReport | null;
  serverError: ServiceError | null;
  dirty: boolean;
  /** sequence number of the newest issued analyze request */
  lastIssuedSeq: number;
  /** sequence number of the newest applied response */
  lastAppliedSeq: number;
}

export const DEFAULT_LAYER_FIELDS: Record<LayerKind, LayerObj> = {
  dense: { kind: "dense", output_size: 10, use_bias: true, activation: "none" },
  conv2d: {
    kind: "conv2d",
    kernel_rows: 3,
    kernel_cols: 3,
    stride_rows: 1,
    stride_cols: 1,
    pad_rows: 0,
    pad_cols: 0,
    num_filters: 1,
    use_bias: true,
    activation: "none",
  },
  pool2d: { kind: "pool2d", kernel_rows: 2, kernel_cols: 2, stride_rows: 2, stride_cols: 2 },
  flatten: { kind: "flatten" },
};

export function newSession(): UiSession {
  return {
    network: {
      name: "untitled",
      input_shape: { rows: 28, cols: 28, channels: 1 },
      layers: [{ ...DEFAULT_LAYER_FIELDS.dense }],
    },
    hardwareId: "nvidia-a100",
    dtype: "fp32",
    training: { training_samples: 10000, epochs: 100, backward_multiplier: 2 },
    intensity: { grams_co2eq_per_kwh: 250, region_label: "US West Coast" },
    report: null,
    serverError: null,
    dirty: true,
    lastIssuedSeq: 0,
    lastAppliedSeq: 0,
  };
}

export function sessionErrors(session: UiSession): SessionErrors {
  return {
    name: validateName(session.network.name),
    inputShape: validateInputShape(session.network.input_shape),
    layers: session.network.layers.map(validateLayer),
  };
}

/** An invalid session must not produce a request. */
export function canSubmit(session: UiSession): boolean {
  return session.network.layers.length > 0 && !hasErrors(sessionErrors(session));
}

function touched(session: UiSession, network: NetworkObj): UiSession {
  return { ...session, network, dirty: true, serverError: null };
}

export function editLayer(
  session: UiSession,
  index: number,
  field: string,
  value: number | boolean | string | undefined,
): UiSession {
  const layers = session.network.layers.map((layer, i) =>
    i === index ? ({ ...layer, [field]: value } as LayerObj) : layer,
  );
  return touched(session, { ...session.network, layers });
}

export function addLayer(session: UiSession, kind: LayerKind, index?: number): UiSession {
  const layers = [...session.network.layers];
  layers.splice(index ?? layers.length, 0, { ...DEFAULT_LAYER_FIELDS[kind] });
  return touched(session, { ...session.network, layers });
}

export function removeLayer(session: UiSession, index: number): UiSession {
  const layers = session.network.layers.filter((_, i) => i !== index);
  return touched(session, { ...session.network, layers });
}

export function setInputShape(session: UiSession, shape: InputShape): UiSession {
  return touched(session, { ...session.network, input_shape: shape });
}

export function setName(session: UiSession, name: string): UiSession {
  return touched(session, { ...session.network, name });
}

export function setHardware(session: UiSession, hardwareId: string): UiSession {
  return { ...session, hardwareId, dirty: true, serverError: null };
}

export function setDtype(session: UiSession, dtype: DataTypeName): UiSession {
  return { ...session, dtype, dirty: true, serverError: null };
}

export function setTraining(session: UiSession, training: TrainingObj): UiSession {
  return { ...session, training, dirty: true, serverError: null };
}

export function setIntensity(session: UiSession, intensity: IntensityObj): UiSession {
  return { ...session, intensity, dirty: true, serverError: null };
}

export function loadDocument(session: UiSession, document: DocumentObj): UiSession {
  return touched(session, {
    name: document.network.name,
    input_shape: { ...document.network.input_shape },
    layers: document.network.layers.map((layer) => ({ ...layer })),
  });
}

/** Issue a new analyze request: bumps and returns the sequence number. */
export function beginAnalyze(session: UiSession): { session: UiSession; seq: number } {
  const seq = session.lastIssuedSeq + 1;
  return { session: { ...session, lastIssuedSeq: seq }, seq };
}

/**
 * Apply a response for request `seq`. Stale responses (an in-flight
 * request that was superseded before it resolved) are discarded.
 */
export function applyReport(
  session: UiSession,
  seq: number,
  report: AnalysisReport,
): UiSession {
  if (seq !== session.lastIssuedSeq || seq <= session.lastAppliedSeq) {
    return session;
  }
  return {
    ...session,
    report,
    serverError: null,
    dirty: false,
    lastAppliedSeq: seq,
  };
}

export function applyError(session: UiSession, seq: number, error: ServiceError): UiSession {
  if (seq !== session.lastIssuedSeq || seq <= session.lastAppliedSeq) {
    return session;
  }
  return { ...session, serverError: error, lastAppliedSeq: seq };
}

const LAYER_FIELD_TOKENS = new Set([
  "output_size", "kernel_rows", "kernel_cols", "stride_rows", "stride_cols",
  "pad_rows", "pad_cols", "num_filters", "use_bias", "activation",
]);

// shape errors name an axis ("row kernel 9 exceeds ..."), not a field
const AXIS_TOKENS: Record<string, string> = {
  row: "kernel_rows",
  col: "kernel_cols",
};

/**
 * Pin a server error's message to the layer field it names, when its
 * message follows the server's "layer <i> (<kind>): <field> ..." shape,
 * so the error renders inline at the offending input.
 */
export function serverErrorTarget(
  error: ServiceError,
): { index: number; field: string } | null {
  const match = /^layer (\d+) \([a-z0-9_]+\): ([a-z_]+)\b/.exec(error.message);
  if (!match) return null;
  const token = match[2]!;
  const field = LAYER_FIELD_TOKENS.has(token) ? token : AXIS_TOKENS[token];
  if (!field) return null;
  return { index: Number(match[1]), field };
}
