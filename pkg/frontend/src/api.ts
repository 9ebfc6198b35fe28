// Typed client for the read-only report API. Every value rendered by the
// UI comes from these payloads verbatim; the client never derives numbers.

export interface FeatureSummary {
  id: string;
  name: string;
  controller: string;
  main_method: string;
  total: number;
  file_count: number;
}

export interface FeatureDetail {
  id: string;
  name: string;
  controller: string;
  main_method: string;
  files: string[];
  total: number;
  per_file: Record<string, number>;
  per_type: Record<string, number>;
}

export interface FindingPayload {
  type: string;
  entity_key: string;
  file: string;
  evidence: Record<string, number>;
}

export interface FileDetail {
  path: string;
  package: string;
  loc: number;
  parse_gaps: number;
  types: string[];
  findings: FindingPayload[];
  entities: string[];
}

export interface EntityDetail {
  key: string;
  kind: string;
  file: string;
  scope: "class" | "method";
  metrics: Record<string, number>;
  findings: FindingPayload[];
}

export class NotFoundError extends Error {
  constructor(what: string) {
    super(`${what} not found`);
  }
}

export class ApiUnreachableError extends Error {
  constructor(cause: unknown) {
    super(`API unreachable: ${String(cause)}`);
  }
}

async function getJson<T>(url: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url);
  } catch (err) {
    throw new ApiUnreachableError(err);
  }
  if (response.status === 404) {
    throw new NotFoundError(url);
  }
  if (!response.ok) {
    throw new ApiUnreachableError(`HTTP ${response.status}`);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  getFeatures(): Promise<FeatureSummary[]> {
    return getJson(`${this.base}/api/features`);
  }

  getFeature(id: string): Promise<FeatureDetail> {
    return getJson(`${this.base}/api/features/${encodeURIComponent(id)}`);
  }

  getFile(path: string): Promise<FileDetail> {
    return getJson(`${this.base}/api/files/${encodeURIComponent(path)}`);
  }

  getEntity(key: string): Promise<EntityDetail> {
    return getJson(`${this.base}/api/entities/${encodeURIComponent(key)}`);
  }
}
