// JSON shapes exchanged with the /api/v1 service. These mirror the
// server's document schema field for field; the UI never re-derives any
// cost quantity from them.

export type LayerKind = "dense" | "conv2d" | "pool2d" | "flatten";
export type Activation = "none" | "relu" | "leaky_relu";
export type DataTypeName = "fp64" | "fp32" | "fp16" | "bf16" | "int8" | "int1";

export interface InputShape {
  rows: number;
  cols: number;
  channels: number;
}

export interface LayerObj {
  kind: LayerKind;
  output_size?: number;
  kernel_rows?: number;
  kernel_cols?: number;
  stride_rows?: number;
  stride_cols?: number;
  pad_rows?: number;
  pad_cols?: number;
  num_filters?: number;
  use_bias?: boolean;
  activation?: Activation;
}

export interface NetworkObj {
  name: string;
  input_shape: InputShape;
  layers: LayerObj[];
}

export interface DocumentObj {
  format_version: string;
  kind: "network";
  metadata?: Record<string, string>;
  network: NetworkObj;
}

export interface TrainingObj {
  training_samples: number;
  epochs: number;
  backward_multiplier: number;
}

export interface IntensityObj {
  grams_co2eq_per_kwh: number;
  region_label: string;
}

export interface ProfileObj {
  id: string;
  architecture: string;
  flops_per_cycle: Record<string, number>;
  clock_hz: number | null;
  cores: number | null;
  efficiency_flops_per_watt: number | null;
  tdp_watts: number | null;
  notes: string;
}

export interface LayerCostObj {
  index: number;
  kind: LayerKind;
  flops: number;
  macs: number;
  weights: number;
  output_shape: InputShape;
  warnings: string[];
}

export interface CurvePointObj {
  predictions: number;
  grams: number;
  marker?: string;
}

export interface AnalysisReport {
  tool: { name: string; version: string };
  inputs: {
    network: DocumentObj;
    hardware: ProfileObj;
    dtype: DataTypeName;
    training: TrainingObj;
    intensity: IntensityObj;
    prediction_counts: number[] | null;
  };
  cost: {
    per_layer: LayerCostObj[];
    total_flops: number;
    total_macs: number;
    total_weights: number;
    mflops: number;
  };
  hardware: { efficiency_flops_per_watt: number; peak_flops: number | null };
  energy: {
    e_forward_j: number;
    e_backward_j: number;
    e_training_j: number;
    e_per_prediction_j: number;
  };
  carbon: {
    training_g: number;
    per_prediction_g: number;
    curve: CurvePointObj[] | null;
  };
  warnings: string[];
}

export interface CurveReport {
  tool: { name: string; version: string };
  total_flops: number;
  training_g: number;
  per_prediction_g: number;
  curve: CurvePointObj[];
}

export interface ZooEntryObj {
  id: string;
  provenance: string;
  document: DocumentObj;
}

export interface ServiceError {
  code: string;
  message: string;
  location?: { line: number; col: number; file?: string };
}
