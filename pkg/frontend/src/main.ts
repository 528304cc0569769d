// Browser entry point. Takes the service base from the "api" query parameter
// (default http://127.0.0.1:8080) and the model id from "model" or the URL
// hash; without one it offers a file picker that posts an assembled network
// document to the service and then starts the console.

import { ApiClient } from './api.js';
import { createApp } from './app.js';

function serviceBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get('api') ?? 'http://127.0.0.1:8080';
}

function modelIdFromLocation(): string | null {
  const params = new URLSearchParams(window.location.search);
  const fromQuery = params.get('model');
  if (fromQuery !== null && fromQuery !== '') {
    return fromQuery;
  }
  const hash = window.location.hash;
  if (hash.startsWith('#model=') && hash.length > '#model='.length) {
    return hash.slice('#model='.length);
  }
  return null;
}

async function bootstrap(): Promise<void> {
  const root = document.querySelector('#app');
  if (!(root instanceof HTMLElement)) {
    return;
  }
  const base = serviceBase();
  const existing = modelIdFromLocation();
  if (existing !== null) {
    createApp(root, { base, modelId: existing });
    return;
  }
  root.innerHTML = `
    <p>No model loaded. Pick a network document produced by
    <code>aerorisk assemble --output model.json</code>; it is posted to
    <code>${base}</code> and the console starts on the stored model.</p>
    <input type="file" id="model-file" accept="application/json,.json">
    <div id="boot-error" style="color:#c0392b;white-space:pre-wrap;"></div>`;
  const input = root.querySelector('#model-file') as HTMLInputElement;
  input.onchange = async () => {
    const file = input.files?.[0];
    if (file === undefined) {
      return;
    }
    const errorEl = root.querySelector('#boot-error') as HTMLElement;
    try {
      const doc = JSON.parse(await file.text());
      const created = await new ApiClient(base).createModel(doc);
      window.location.hash = `model=${created.id}`;
      createApp(root, { base, modelId: created.id });
    } catch (err) {
      errorEl.textContent = String(err);
    }
  };
}

void bootstrap();
