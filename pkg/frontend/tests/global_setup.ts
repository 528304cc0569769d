// Spawns the real aerorisk HTTP service once for the whole test run,
// assembles the shipped model with the CLI, posts it to the service and
// records the connection details for the tests.

import { spawn, spawnSync, type ChildProcess } from 'node:child_process';
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from 'node:fs';
import { createServer } from 'node:net';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

const INFO_PATH = join(process.cwd(), 'tests', '.service.json');

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.once('error', reject);
    probe.listen(0, '127.0.0.1', () => {
      const address = probe.address();
      if (address === null || typeof address === 'string') {
        probe.close(() => reject(new Error('no port assigned')));
        return;
      }
      const port = address.port;
      probe.close(() => resolve(port));
    });
  });
}

async function waitReady(base: string): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt += 1) {
    try {
      const response = await fetch(`${base}/v1/registry`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error('aerorisk service did not come up');
}

export default async function setup(): Promise<() => Promise<void>> {
  const work = mkdtempSync(join(tmpdir(), 'aerorisk-webui-'));
  const modelPath = join(work, 'model.json');

  const assemble = spawnSync('aerorisk', ['assemble', '--output', modelPath], { encoding: 'utf8' });
  if (assemble.status !== 0) {
    throw new Error(`aerorisk assemble failed: ${assemble.stderr}`);
  }

  const port = await freePort();
  const child: ChildProcess = spawn('aerorisk', ['serve', '--port', String(port)], {
    env: { ...process.env, AERORISK_STORE: join(work, 'store') },
    stdio: ['ignore', 'ignore', 'pipe'],
  });
  const base = `http://127.0.0.1:${port}`;
  await waitReady(base);

  const doc = JSON.parse(readFileSync(modelPath, 'utf8'));
  const response = await fetch(`${base}/v1/models`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(doc),
  });
  if (!response.ok && response.status !== 201) {
    throw new Error(`model upload failed with HTTP ${response.status}`);
  }
  const created = (await response.json()) as { id: string };

  writeFileSync(INFO_PATH, JSON.stringify({ base, modelId: created.id, modelPath }));

  return async () => {
    child.kill('SIGTERM');
    await new Promise((resolve) => setTimeout(resolve, 200));
    rmSync(work, { recursive: true, force: true });
    rmSync(INFO_PATH, { force: true });
  };
}
