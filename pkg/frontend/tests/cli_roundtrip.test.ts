// Round trip from the evidence panel through a scenario document to the
// aerorisk CLI: replaying the serialized panel against the same model file
// must produce exactly the numbers the service returned to the console.

import { spawnSync } from 'node:child_process';
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { afterAll, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { createApp } from '../src/app.js';
import { pct3 } from '../src/format.js';
import { serviceInfo } from './service_info.js';

interface ScenarioResultDoc {
  name: string;
  target: string;
  states: string[];
  prior: number[];
  posterior: number[];
  deltas: number[];
  warnings: string[];
}

const info = serviceInfo();
const client = new ApiClient(info.base);
const work = mkdtempSync(join(tmpdir(), 'aerorisk-roundtrip-'));

afterAll(() => {
  rmSync(work, { recursive: true, force: true });
});

describe('panel to CLI round trip', () => {
  it('replaying the serialized panel via the CLI yields identical posteriors', async () => {
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = createApp(root, { base: info.base, modelId: info.modelId, debounceMs: 0 });
    await app.ready;

    app.setFactor('PE', 'YES');
    app.setFactor('WE', 'YES');
    await app.flush();

    const scenario = app.scenarioDoc('console replay');
    expect(scenario.evidence).toEqual({ PE: 'YES', WE: 'YES' });
    const scenarioPath = join(work, 'scenario.json');
    writeFileSync(scenarioPath, JSON.stringify(scenario));

    const run = spawnSync(
      'aerorisk',
      ['run', '--model', info.modelPath, '--scenario', scenarioPath, '--format', 'json'],
      { encoding: 'utf8' },
    );
    expect(run.status).toBe(0);
    const result = JSON.parse(run.stdout) as ScenarioResultDoc;
    expect(result.target).toBe('Crash');

    const direct = await client.query(info.modelId, 'Crash', scenario.evidence);
    expect(result.states).toEqual(direct.states);
    result.posterior.forEach((value, index) => {
      expect(Math.abs(value - direct.probabilities[index])).toBeLessThan(1e-12);
    });

    direct.states.forEach((state, index) => {
      const label = root.querySelector(`.prob[data-state="${state}"]`)?.textContent;
      expect(label).toBe(pct3(result.posterior[index]));
    });
    root.remove();
  });

  it('an all-unset panel replays to the CLI prior', async () => {
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = createApp(root, { base: info.base, modelId: info.modelId, debounceMs: 0 });
    await app.ready;

    const scenario = app.scenarioDoc('baseline');
    const scenarioPath = join(work, 'baseline.json');
    writeFileSync(scenarioPath, JSON.stringify(scenario));

    const run = spawnSync(
      'aerorisk',
      ['run', '--model', info.modelPath, '--scenario', scenarioPath, '--format', 'json'],
      { encoding: 'utf8' },
    );
    expect(run.status).toBe(0);
    const result = JSON.parse(run.stdout) as ScenarioResultDoc;

    const direct = await client.query(info.modelId, 'Crash', {});
    result.posterior.forEach((value, index) => {
      expect(Math.abs(value - direct.probabilities[index])).toBeLessThan(1e-12);
    });
    result.deltas.forEach((delta) => {
      expect(Math.abs(delta)).toBeLessThan(1e-12);
    });
    root.remove();
  });
});
