// Presentation-side unit conversion. This module is the ONLY place the
// UI is allowed to scale a server-reported number, and only by the exact
// unit factors below; everything else displays server values verbatim.

export type EnergyUnit = "J" | "kJ" | "kWh";
export type MassUnit = "g" | "kg";

export const JOULES_PER_KWH = 3.6e6;

const ENERGY_FACTORS: Record<EnergyUnit, number> = {
  J: 1,
  kJ: 1e3,
  kWh: JOULES_PER_KWH,
};

const MASS_FACTORS: Record<MassUnit, number> = { g: 1, kg: 1e3 };

export function convertEnergy(joules: number, unit: EnergyUnit): number {
  return joules / ENERGY_FACTORS[unit];
}

export function convertMass(grams: number, unit: MassUnit): number {
  return grams / MASS_FACTORS[unit];
}

/** Compact scientific/positional rendering of a server value. */
export function formatNumber(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1e6 || magnitude < 1e-3) {
    return value.toExponential(3);
  }
  return String(Number(value.toPrecision(6)));
}

export function formatEnergy(joules: number, unit: EnergyUnit): string {
  return `${formatNumber(convertEnergy(joules, unit))} ${unit}`;
}

export function formatMass(grams: number, unit: MassUnit): string {
  return `${formatNumber(convertMass(grams, unit))} ${unit}`;
}

/**
 * MFLOPs display truncated (not rounded) to three decimals, matching the
 * server's table convention: 0.312532 -> "0.312".
 */
export function formatMflops(mflops: number): string {
  const truncated = Math.floor(mflops * 1000) / 1000;
  return truncated.toFixed(3);
}

export function formatCount(value: number): string {
  return value.toLocaleString("en-US");
}
