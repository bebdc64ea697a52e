// Export/import of the layer table as a JSON document mirroring the
// server's file schema. Round-trip contract: import(export(session))
// reproduces the identical network object.

import type { DocumentObj, LayerObj, NetworkObj } from "./types.js";
import { validateInputShape, validateLayer } from "./validate.js";

const LAYER_FIELD_ORDER = [
  "output_size",
  "kernel_rows",
  "kernel_cols",
  "stride_rows",
  "stride_cols",
  "pad_rows",
  "pad_cols",
  "num_filters",
  "use_bias",
  "activation",
] as const;

function orderedLayer(layer: LayerObj): LayerObj {
  const out: LayerObj = { kind: layer.kind };
  for (const field of LAYER_FIELD_ORDER) {
    const value = layer[field];
    if (value !== undefined) {
      (out as unknown as Record<string, unknown>)[field] = value;
    }
  }
  return out;
}

export function toDocument(network: NetworkObj): DocumentObj {
  return {
    format_version: "1",
    kind: "network",
    network: {
      name: network.name,
      input_shape: { ...network.input_shape },
      layers: network.layers.map(orderedLayer),
    },
  };
}

export function exportDocument(network: NetworkObj): string {
  return JSON.stringify(toDocument(network), null, 2) + "\n";
}

export class ImportError extends Error {}

export function importDocument(text: string): DocumentObj {
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch (err) {
    throw new ImportError(`not valid JSON: ${(err as Error).message}`);
  }
  if (typeof parsed !== "object" || parsed === null) {
    throw new ImportError("document must be a JSON object");
  }
  const doc = parsed as Partial<DocumentObj>;
  if (doc.kind !== undefined && doc.kind !== "network") {
    throw new ImportError(`unsupported document kind ${String(doc.kind)}`);
  }
  if (doc.format_version !== "1") {
    throw new ImportError("missing or unsupported format_version (expected \"1\")");
  }
  const network = doc.network;
  if (!network || typeof network !== "object") {
    throw new ImportError("missing network object");
  }
  if (typeof network.name !== "string") {
    throw new ImportError("network.name must be a string");
  }
  if (!network.input_shape || validateInputShape(network.input_shape).length > 0) {
    throw new ImportError("network.input_shape must have integer rows/cols/channels >= 1");
  }
  if (!Array.isArray(network.layers) || network.layers.length === 0) {
    throw new ImportError("network.layers must be a nonempty array");
  }
  network.layers.forEach((layer, index) => {
    if (!layer || typeof layer !== "object" || typeof layer.kind !== "string") {
      throw new ImportError(`layer ${index}: missing kind`);
    }
    if (!["dense", "conv2d", "pool2d", "flatten"].includes(layer.kind)) {
      throw new ImportError(`layer ${index}: unknown kind ${layer.kind}`);
    }
    const errors = validateLayer(layer);
    if (errors.length > 0) {
      const first = errors[0]!;
      throw new ImportError(`layer ${index}: ${first.field} ${first.message}`);
    }
  });
  return toDocument(network as NetworkObj);
}
