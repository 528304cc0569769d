// Connection details for the service spawned by the global setup, plus a
// small polling helper for DOM updates driven by async fetches.

import { readFileSync } from 'node:fs';
import { join } from 'node:path';

export interface ServiceInfo {
  base: string;
  modelId: string;
  modelPath: string;
}

export function serviceInfo(): ServiceInfo {
  const raw = readFileSync(join(process.cwd(), 'tests', '.service.json'), 'utf8');
  return JSON.parse(raw) as ServiceInfo;
}

export async function until(condition: () => boolean, timeoutMs = 10000): Promise<void> {
  const start = Date.now();
  while (!condition()) {
    if (Date.now() - start > timeoutMs) {
      throw new Error('condition not met in time');
    }
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}
