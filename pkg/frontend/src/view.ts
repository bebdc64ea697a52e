// Pure view-model construction: turns a server report into the display
// strings the DOM shows. Every number here is a server value passed
// through format.ts unit conversion only; this module performs no cost
// arithmetic of its own (asserted by the view snapshot test).

import type { AnalysisReport } from "./types.js";
import {
  convertEnergy,
  convertMass,
  formatCount,
  formatEnergy,
  formatMass,
  formatMflops,
  formatNumber,
  type EnergyUnit,
  type MassUnit,
} from "./format.js";

export interface LayerRowView {
  index: number;
  kind: string;
  flops: string;
  macs: string;
  weights: string;
  outputShape: string;
  warnings: string[];
}

export interface SummaryView {
  totalFlops: string;
  mflops: string;
  totalWeights: string;
  totalMacs: string;
  efficiency: string;
  eForward: string;
  eBackward: string;
  eTraining: string;
  ePerPrediction: string;
  carbonTraining: string;
  carbonPerPrediction: string;
  layers: LayerRowView[];
  warnings: string[];
  /** raw server values backing each display string, for traceability */
  sources: Record<string, number>;
}

export function summaryView(
  report: AnalysisReport,
  energyUnit: EnergyUnit,
  massUnit: MassUnit,
): SummaryView {
  const layers = report.cost.per_layer.map((layer) => ({
    index: layer.index,
    kind: layer.kind,
    flops: formatCount(layer.flops),
    macs: formatCount(layer.macs),
    weights: formatCount(layer.weights),
    outputShape: `${layer.output_shape.rows}x${layer.output_shape.cols}x${layer.output_shape.channels}`,
    warnings: layer.warnings,
  }));
  return {
    totalFlops: formatCount(report.cost.total_flops),
    mflops: `${formatMflops(report.cost.mflops)} MFLOPs`,
    totalWeights: formatCount(report.cost.total_weights),
    totalMacs: formatCount(report.cost.total_macs),
    efficiency: `${formatNumber(report.hardware.efficiency_flops_per_watt)} FLOPS/W`,
    eForward: formatEnergy(report.energy.e_forward_j, energyUnit),
    eBackward: formatEnergy(report.energy.e_backward_j, energyUnit),
    eTraining: formatEnergy(report.energy.e_training_j, energyUnit),
    ePerPrediction: formatEnergy(report.energy.e_per_prediction_j, energyUnit),
    carbonTraining: formatMass(report.carbon.training_g, massUnit),
    carbonPerPrediction: formatMass(report.carbon.per_prediction_g, massUnit),
    layers,
    warnings: report.warnings,
    sources: {
      totalFlops: report.cost.total_flops,
      mflops: report.cost.mflops,
      totalWeights: report.cost.total_weights,
      totalMacs: report.cost.total_macs,
      efficiency: report.hardware.efficiency_flops_per_watt,
      eForward: convertEnergy(report.energy.e_forward_j, energyUnit),
      eBackward: convertEnergy(report.energy.e_backward_j, energyUnit),
      eTraining: convertEnergy(report.energy.e_training_j, energyUnit),
      ePerPrediction: convertEnergy(report.energy.e_per_prediction_j, energyUnit),
      carbonTraining: convertMass(report.carbon.training_g, massUnit),
      carbonPerPrediction: convertMass(report.carbon.per_prediction_g, massUnit),
    },
  };
}
