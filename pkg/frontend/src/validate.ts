// Client-side mirror of the server's layer schema. An invalid row blocks
// submission and pins the error to the offending field; the server stays
// the source of truth for anything this mirror does not catch.

import type { InputShape, LayerKind, LayerObj } from "./types.js";

export interface FieldError {
  field: string;
  message: string;
}

const ACTIVATIONS = new Set(["none", "relu", "leaky_relu"]);

function positiveInt(value: unknown): boolean {
  return typeof value === "number" && Number.isInteger(value) && value >= 1;
}

function nonNegativeInt(value: unknown): boolean {
  return typeof value === "number" && Number.isInteger(value) && value >= 0;
}

function check(
  errors: FieldError[],
  layer: LayerObj,
  field: keyof LayerObj,
  ok: (v: unknown) => boolean,
  message: string,
): void {
  if (field in layer && !ok(layer[field])) {
    errors.push({ field, message });
  }
}

export function requiredFields(kind: LayerKind): string[] {
  switch (kind) {
    case "dense":
      return ["output_size"];
    case "conv2d":
    case "pool2d":
      return ["kernel_rows", "kernel_cols"];
    case "flatten":
      return [];
  }
}

export function validateLayer(layer: LayerObj): FieldError[] {
  const errors: FieldError[] = [];
  for (const field of requiredFields(layer.kind)) {
    if (!(field in layer) || layer[field as keyof LayerObj] === undefined) {
      errors.push({ field, message: `${field} is required` });
    }
  }
  check(errors, layer, "output_size", positiveInt, "must be an integer >= 1");
  check(errors, layer, "kernel_rows", positiveInt, "must be an integer >= 1");
  check(errors, layer, "kernel_cols", positiveInt, "must be an integer >= 1");
  check(errors, layer, "stride_rows", positiveInt, "must be an integer >= 1");
  check(errors, layer, "stride_cols", positiveInt, "must be an integer >= 1");
  check(errors, layer, "num_filters", positiveInt, "must be an integer >= 1");
  check(errors, layer, "pad_rows", nonNegativeInt, "must be an integer >= 0");
  check(errors, layer, "pad_cols", nonNegativeInt, "must be an integer >= 0");
  if (layer.activation !== undefined && !ACTIVATIONS.has(layer.activation)) {
    errors.push({ field: "activation", message: "must be none, relu, or leaky_relu" });
  }
  if (layer.use_bias !== undefined && typeof layer.use_bias !== "boolean") {
    errors.push({ field: "use_bias", message: "must be a boolean" });
  }
  if (layer.kind === "pool2d") {
    for (const field of ["pad_rows", "pad_cols", "num_filters", "output_size"] as const) {
      if (layer[field] !== undefined) {
        errors.push({ field, message: `${field} does not apply to pool2d` });
      }
    }
  }
  if (layer.kind === "flatten") {
    for (const field of Object.keys(layer)) {
      if (field !== "kind") {
        errors.push({ field, message: `${field} does not apply to flatten` });
      }
    }
  }
  return errors;
}

export function validateInputShape(shape: InputShape): FieldError[] {
  const errors: FieldError[] = [];
  for (const field of ["rows", "cols", "channels"] as const) {
    if (!positiveInt(shape[field])) {
      errors.push({ field, message: "must be an integer >= 1" });
    }
  }
  return errors;
}

export function validateName(name: string): FieldError[] {
  if (!name || name.trim() !== name || /[\r\n]/.test(name)) {
    return [{ field: "name", message: "must be a single-line name without edge whitespace" }];
  }
  return [];
}

export interface SessionErrors {
  name: FieldError[];
  inputShape: FieldError[];
  layers: FieldError[][];
}

export function hasErrors(errors: SessionErrors): boolean {
  return (
    errors.name.length > 0 ||
    errors.inputShape.length > 0 ||
    errors.layers.some((layer) => layer.length > 0)
  );
}
