// Log-log SVG chart of carbon vs predictions, built as a string so it is
// testable without a DOM. Supports overlaying several model curves for
// comparison. Coordinates come straight from server curve points; only
// axis placement math happens here.

import type { CurvePointObj } from "./types.js";

export interface CurveSeries {
  label: string;
  points: CurvePointObj[];
}

export interface ChartOptions {
  width?: number;
  height?: number;
  margin?: number;
}

function log10(value: number): number {
  return Math.log(value) / Math.LN10;
}

export function curveChartSvg(series: CurveSeries[], options: ChartOptions = {}): string {
  const width = options.width ?? 640;
  const height = options.height ?? 320;
  const margin = options.margin ?? 48;
  const drawable = series
    .map((s) => ({
      label: s.label,
      points: s.points.filter((p) => p.predictions > 0 && p.grams > 0),
    }))
    .filter((s) => s.points.length > 0);
  if (drawable.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}"></svg>`;
  }
  const all = drawable.flatMap((s) => s.points);
  const xs = all.map((p) => log10(p.predictions));
  const ys = all.map((p) => log10(p.grams));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs, xMin + 1e-9);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys, yMin + 1e-9);
  const xScale = (v: number) =>
    margin + ((v - xMin) / (xMax - xMin)) * (width - 2 * margin);
  const yScale = (v: number) =>
    height - margin - ((v - yMin) / (yMax - yMin)) * (height - 2 * margin);

  const body: string[] = [];

  const markedCounts = new Set<number>();
  for (const point of all) {
    if (point.marker && !markedCounts.has(point.predictions)) {
      markedCounts.add(point.predictions);
      const x = xScale(log10(point.predictions)).toFixed(1);
      body.push(
        `<line x1="${x}" y1="${margin}" x2="${x}" y2="${height - margin}" class="marker-line"/>` +
          `<text x="${x}" y="${margin - 6}" text-anchor="middle" class="marker-label">${point.marker}</text>`,
      );
    }
  }

  drawable.forEach((s, seriesIndex) => {
    const path = s.points
      .map(
        (p, i) =>
          `${i === 0 ? "M" : "L"}${xScale(log10(p.predictions)).toFixed(1)},${yScale(log10(p.grams)).toFixed(1)}`,
      )
      .join(" ");
    body.push(
      `<path d="${path}" fill="none" class="curve-path series-${seriesIndex}" data-series="${s.label}"/>`,
    );
    for (const p of s.points) {
      const cx = xScale(log10(p.predictions)).toFixed(1);
      const cy = yScale(log10(p.grams)).toFixed(1);
      const marker = p.marker ? ` data-marker="${p.marker}" class="marker-point"` : "";
      body.push(
        `<circle cx="${cx}" cy="${cy}" r="3"${marker}>` +
          `<title>${s.label}: ${p.predictions} predictions: ${p.grams} g</title></circle>`,
      );
    }
    body.push(
      `<text x="${width - margin}" y="${margin + 14 + 14 * seriesIndex}" ` +
        `text-anchor="end" class="legend series-${seriesIndex}">${s.label}</text>`,
    );
  });

  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" class="curve-chart">` +
    `<rect x="${margin}" y="${margin}" width="${width - 2 * margin}" height="${height - 2 * margin}" class="plot-area"/>` +
    `<text x="${width / 2}" y="${height - 8}" text-anchor="middle" class="axis-label">predictions (log)</text>` +
    `<text x="12" y="${height / 2}" text-anchor="middle" transform="rotate(-90 12 ${height / 2})" class="axis-label">g CO2eq (log)</text>` +
    body.join("") +
    `</svg>`
  );
}
