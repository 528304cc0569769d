// Console orchestration. Holds the evidence panel, issues service queries on
// toggle (debounced, newest response wins), and renders the posterior bars,
// the tornado chart and the hazard registry. Errors are shown inline with
// the service message verbatim and never reset the panel.

import {
  ApiClient,
  ServiceError,
  type DistributionDoc,
  type FetchLike,
  type NetworkDoc,
  type RegistryDoc,
  type TornadoDoc,
  type ValidationDoc,
} from './api.js';
import {
  createPanel,
  panelEvidence,
  panelScenario,
  toggleFactor as cyclePanelFactor,
  setFactor as setPanelFactor,
  type EvidencePanel,
  type FactorSetting,
  type ScenarioDoc,
} from './panel.js';
import { escapeHtml } from './format.js';
import { renderPosterior } from './posterior.js';
import { renderTornado } from './tornado.js';
import { renderRegistry } from './registry.js';

export interface AppConfig {
  base: string;
  modelId: string;
  fetchImpl?: FetchLike;
  debounceMs?: number;
  tornadoNodes?: string[];
  targetState?: string;
}

export interface AppState {
  model: NetworkDoc | null;
  panel: EvidencePanel | null;
  prior: DistributionDoc | null;
  posterior: DistributionDoc | null;
  tornado: TornadoDoc | null;
  registry: RegistryDoc | null;
  validation: ValidationDoc | null;
  error: string | null;
}

export interface App {
  ready: Promise<void>;
  state: AppState;
  client: ApiClient;
  toggleFactor(name: string): void;
  setFactor(name: string, setting: FactorSetting): void;
  setTargetState(state: string): void;
  setModelId(id: string): void;
  flush(): Promise<void>;
  scenarioDoc(name: string): ScenarioDoc;
}

const SKELETON = `
  <div class="console" style="font-family:system-ui,sans-serif;max-width:960px;">
    <div id="error" hidden style="white-space:pre-wrap;color:#c0392b;border:1px solid #c0392b;padding:8px;margin:8px 0;"></div>
    <section><h2 style="font-size:1.1em;">evidence</h2><div id="panel"></div></section>
    <section><h2 style="font-size:1.1em;">posterior</h2><div id="posterior"></div></section>
    <section><h2 style="font-size:1.1em;">sensitivity</h2><div id="tornado"></div></section>
    <section><h2 style="font-size:1.1em;">hazard registry</h2><div id="registry"></div></section>
  </div>`;

function describeError(err: unknown): string {
  if (err instanceof ServiceError) {
    const lines = [`${err.code}: ${err.message}`];
    for (const violation of err.violations) {
      lines.push(`[${violation.code}] ${violation.message}`);
    }
    return lines.join('\n');
  }
  return String(err);
}

export function createApp(root: HTMLElement, config: AppConfig): App {
  const client = new ApiClient(config.base, config.fetchImpl);
  const debounceMs = config.debounceMs ?? 250;
  let modelId = config.modelId;
  let tornadoNodes: string[] = config.tornadoNodes ?? [];

  const state: AppState = {
    model: null,
    panel: null,
    prior: null,
    posterior: null,
    tornado: null,
    registry: null,
    validation: null,
    error: null,
  };

  let timer: ReturnType<typeof setTimeout> | null = null;
  let seq = 0;

  root.innerHTML = SKELETON;
  const section = (id: string): HTMLElement => root.querySelector(`#${id}`) as HTMLElement;

  function renderError(): void {
    const el = section('error');
    if (state.error === null) {
      el.hidden = true;
      el.textContent = '';
    } else {
      el.hidden = false;
      el.textContent = state.error;
    }
  }

  function renderPanel(): void {
    const host = section('panel');
    if (state.panel === null) {
      host.innerHTML = '<p class="empty">no model loaded</p>';
      return;
    }
    const buttons = state.panel.factors
      .map((name) => {
        const setting = state.panel!.settings[name];
        const label = setting === 'Unset' ? 'unset' : setting;
        const tone = setting === 'YES' ? '#fbe4e1' : setting === 'NO' ? '#e2f0e4' : '#fff';
        return `<button type="button" class="factor" data-factor="${escapeHtml(name)}" data-setting="${setting}" style="padding:4px 10px;border:1px solid #99a;border-radius:6px;background:${tone};cursor:pointer;">${escapeHtml(name)}: ${label}</button>`;
      })
      .join('');
    const options = (state.model?.nodes.find((n) => n.name === state.panel!.target)?.states ?? [])
      .map((s) => `<option value="${escapeHtml(s)}"${s === state.panel!.targetState ? ' selected' : ''}>${escapeHtml(s)}</option>`)
      .join('');
    host.innerHTML = `
      <div class="factors" style="display:flex;flex-wrap:wrap;gap:8px;">${buttons}</div>
      <label style="display:block;margin-top:10px;">tornado target state
        <select id="target-state">${options}</select>
      </label>`;
  }

  function renderResults(): void {
    renderError();
    renderPosterior(section('posterior'), state.prior, state.posterior);
    renderTornado(section('tornado'), state.tornado, tornadoNodes.length === 0 ? 'no sensitivity nodes selected' : undefined);
    renderRegistry(section('registry'), state.registry, state.validation);
  }

  async function runRefresh(): Promise<void> {
    if (state.panel === null) return;
    const ticket = ++seq;
    const evidence = panelEvidence(state.panel);
    try {
      const posterior = await client.query(modelId, state.panel.target, evidence);
      if (ticket !== seq) return;
      let tornado: TornadoDoc | null = null;
      if (tornadoNodes.length > 0) {
        tornado = await client.tornado(modelId, state.panel.target, state.panel.targetState, tornadoNodes, evidence);
        if (ticket !== seq) return;
      }
      state.posterior = posterior;
      state.tornado = tornado;
      state.error = null;
    } catch (err) {
      if (ticket !== seq) return;
      state.error = describeError(err);
    }
    renderResults();
  }

  function scheduleRefresh(): void {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      void runRefresh();
    }, debounceMs);
  }

  async function flush(): Promise<void> {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
    await runRefresh();
  }

  function toggleFactor(name: string): void {
    if (state.panel === null) return;
    cyclePanelFactor(state.panel, name);
    renderPanel();
    scheduleRefresh();
  }

  function setFactor(name: string, setting: FactorSetting): void {
    if (state.panel === null) return;
    setPanelFactor(state.panel, name, setting);
    renderPanel();
    scheduleRefresh();
  }

  function setTargetState(targetState: string): void {
    if (state.panel === null) return;
    state.panel.targetState = targetState;
    renderPanel();
    scheduleRefresh();
  }

  function setModelId(id: string): void {
    modelId = id;
    void runRefresh();
  }

  root.addEventListener('click', (event) => {
    const button = (event.target as HTMLElement).closest('[data-factor]');
    if (button instanceof HTMLElement && button.dataset.factor) {
      toggleFactor(button.dataset.factor);
    }
  });
  root.addEventListener('change', (event) => {
    const select = event.target as HTMLSelectElement;
    if (select && select.id === 'target-state') {
      setTargetState(select.value);
    }
  });

  async function init(): Promise<void> {
    try {
      const model = await client.getModel(modelId);
      const factors = model.nodes.filter((n) => n.kind === 'Observable').map((n) => n.name);
      const targetNode = model.nodes.find((n) => n.kind === 'Target') ?? model.nodes[model.nodes.length - 1];
      const targetState = config.targetState ?? targetNode.states[targetNode.states.length - 1];
      if (config.tornadoNodes === undefined) {
        tornadoNodes = model.nodes.filter((n) => n.kind === 'Intermediate').map((n) => n.name);
      }
      state.model = model;
      state.panel = createPanel(factors, targetNode.name, targetState);
      state.prior = await client.query(modelId, targetNode.name, {});
      state.posterior = state.prior;
      state.tornado = tornadoNodes.length > 0
        ? await client.tornado(modelId, targetNode.name, targetState, tornadoNodes, {})
        : null;
      state.registry = await client.registry();
      state.validation = await client.validateRegistry(state.registry);
      state.error = null;
    } catch (err) {
      state.error = describeError(err);
    }
    renderPanel();
    renderResults();
  }

  const ready = init();

  return {
    ready,
    state,
    client,
    toggleFactor,
    setFactor,
    setTargetState,
    setModelId,
    flush,
    scenarioDoc: (name: string) => {
      if (state.panel === null) {
        throw new Error('no model loaded');
      }
      return panelScenario(state.panel, name);
    },
  };
}
