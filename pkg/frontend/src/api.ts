// Typed client for the aerorisk /v1 HTTP API. Every number shown in the
// console comes back from this client; nothing is computed locally.

export interface NodeDoc {
  name: string;
  states: string[];
  kind?: 'Observable' | 'Intermediate' | 'Target';
}

export interface CptRowDoc {
  parent_states: string[];
  probabilities: number[];
}

export interface CptDoc {
  child: string;
  parents: string[];
  rows: CptRowDoc[];
}

export interface NetworkDoc {
  nodes: NodeDoc[];
  cpts: CptDoc[];
  notes?: string;
}

export interface DistributionDoc {
  node: string;
  states: string[];
  probabilities: number[];
}

export interface TornadoRowDoc {
  node: string;
  states: string[];
  values: (number | null)[];
  low: number;
  high: number;
  bar_length: number;
}

export interface TornadoDoc {
  target: string;
  target_state: string;
  baseline: number;
  rows: TornadoRowDoc[];
}

export interface SfpDoc {
  s: string;
  f: string;
  p: string;
}

export interface MeasureDoc {
  description: string;
  category: string;
  sfp?: SfpDoc;
  plr?: string;
}

export interface HazardDoc {
  id: number;
  name: string;
  source: 'External' | 'Internal';
  hazard_type: string;
  element: string;
  cause: string;
  consequence: string;
  probability: string;
  severity: string;
  risk_level: string;
  measures: MeasureDoc[];
}

export interface RegistryDoc {
  hazards: HazardDoc[];
  notes?: string;
}

export interface ViolationDoc {
  code: string;
  message: string;
  record_id?: number | null;
  field?: string | null;
  expected?: string | null;
}

export interface ValidationDoc {
  valid: boolean;
  records: number;
  violations: ViolationDoc[];
}

export interface ModelCreatedDoc {
  id: string;
  url: string;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  readonly status: number;
  readonly code: string;
  readonly violations: ViolationDoc[];

  constructor(status: number, code: string, message: string, violations: ViolationDoc[] = []) {
    super(message);
    this.name = 'ServiceError';
    this.status = status;
    this.code = code;
    this.violations = violations;
  }
}

interface ErrorEnvelope {
  error?: {
    code?: string;
    message?: string;
    violations?: ViolationDoc[];
  };
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base: string, fetchImpl?: FetchLike) {
    this.base = base.replace(/\/+$/, '');
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.base + path, init);
    } catch (err) {
      throw new ServiceError(0, 'unreachable', `service unreachable: ${String(err)}`);
    }
    const text = await response.text();
    let doc: unknown = null;
    if (text !== '') {
      try {
        doc = JSON.parse(text);
      } catch {
        doc = null;
      }
    }
    if (!response.ok) {
      const envelope = (doc ?? {}) as ErrorEnvelope;
      const code = envelope.error?.code ?? `http_${response.status}`;
      const message = envelope.error?.message ?? `HTTP ${response.status}`;
      throw new ServiceError(response.status, code, message, envelope.error?.violations ?? []);
    }
    return doc as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  createModel(doc: NetworkDoc): Promise<ModelCreatedDoc> {
    return this.post<ModelCreatedDoc>('/v1/models', doc);
  }

  getModel(id: string): Promise<NetworkDoc> {
    return this.request<NetworkDoc>(`/v1/models/${id}`);
  }

  query(id: string, target: string, evidence: Record<string, string>): Promise<DistributionDoc> {
    return this.post<DistributionDoc>(`/v1/models/${id}/query`, { target, evidence });
  }

  tornado(
    id: string,
    target: string,
    targetState: string,
    nodes: string[],
    evidence: Record<string, string> = {},
  ): Promise<TornadoDoc> {
    return this.post<TornadoDoc>(`/v1/models/${id}/tornado`, {
      target,
      target_state: targetState,
      nodes,
      evidence,
    });
  }

  registry(): Promise<RegistryDoc> {
    return this.request<RegistryDoc>('/v1/registry');
  }

  validateRegistry(doc: RegistryDoc): Promise<ValidationDoc> {
    return this.post<ValidationDoc>('/v1/registry/validate', doc);
  }
}
