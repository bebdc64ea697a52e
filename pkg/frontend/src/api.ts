// Thin fetch wrappers over the /api/v1 endpoints. Server error objects
// are surfaced as ApiError so the UI can pin them to fields.

import type {
  AnalysisReport,
  CurveReport,
  DataTypeName,
  DocumentObj,
  IntensityObj,
  ProfileObj,
  ServiceError,
  TrainingObj,
  ZooEntryObj,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public error: ServiceError,
  ) {
    super(error.message);
  }
}

async function call<T>(base: string, path: string, body?: unknown): Promise<T> {
  const response = await fetch(base + path, {
    method: body === undefined ? "GET" : "POST",
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const text = await response.text();
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch {
    throw new ApiError(response.status, {
      code: "bad_response",
      message: `non-JSON response (${response.status})`,
    });
  }
  if (!response.ok) {
    throw new ApiError(response.status, parsed as ServiceError);
  }
  return parsed as T;
}

export interface AnalyzeParams {
  document: DocumentObj;
  hardwareId: string;
  dtype: DataTypeName;
  training: TrainingObj;
  intensity: IntensityObj;
}

export function analyze(base: string, params: AnalyzeParams): Promise<AnalysisReport> {
  return call<AnalysisReport>(base, "/analyze", {
    network: { document: params.document },
    hardware: params.hardwareId,
    dtype: params.dtype,
    training: params.training,
    intensity: params.intensity,
  });
}

export function curve(
  base: string,
  params: AnalyzeParams & { range: { start: number; end: number; points: number } },
): Promise<CurveReport> {
  return call<CurveReport>(base, "/curve", {
    network: { document: params.document },
    hardware: params.hardwareId,
    dtype: params.dtype,
    training: params.training,
    intensity: params.intensity,
    range: params.range,
  });
}

export function health(base: string): Promise<{ status: string; version: string }> {
  return call(base, "/health");
}

export async function hardwareProfiles(base: string): Promise<ProfileObj[]> {
  const body = await call<{ profiles: ProfileObj[] }>(base, "/hardware");
  return body.profiles;
}

export async function zooEntries(base: string): Promise<ZooEntryObj[]> {
  const body = await call<{ entries: ZooEntryObj[] }>(base, "/zoo");
  return body.entries;
}
