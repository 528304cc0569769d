// Evidence panel state. Each factor is tri-state: Unset factors are left out
// of the query payload entirely, YES and NO become hard evidence.

export type FactorSetting = 'Unset' | 'YES' | 'NO';

export interface EvidencePanel {
  factors: string[];
  settings: Record<string, FactorSetting>;
  target: string;
  targetState: string;
}

export interface ScenarioDoc {
  name: string;
  target: string;
  direction: 'Causal' | 'Diagnostic';
  evidence: Record<string, string>;
}

export function createPanel(factors: string[], target: string, targetState: string): EvidencePanel {
  const settings: Record<string, FactorSetting> = {};
  for (const factor of factors) {
    settings[factor] = 'Unset';
  }
  return { factors: [...factors], settings, target, targetState };
}

export function cycleSetting(setting: FactorSetting): FactorSetting {
  if (setting === 'Unset') return 'YES';
  if (setting === 'YES') return 'NO';
  return 'Unset';
}

export function setFactor(panel: EvidencePanel, factor: string, setting: FactorSetting): void {
  if (!(factor in panel.settings)) {
    throw new Error(`unknown factor: ${factor}`);
  }
  panel.settings[factor] = setting;
}

export function toggleFactor(panel: EvidencePanel, factor: string): FactorSetting {
  const next = cycleSetting(panel.settings[factor] ?? 'Unset');
  setFactor(panel, factor, next);
  return next;
}

export function panelEvidence(panel: EvidencePanel): Record<string, string> {
  const evidence: Record<string, string> = {};
  for (const factor of panel.factors) {
    const setting = panel.settings[factor];
    if (setting !== 'Unset') {
      evidence[factor] = setting;
    }
  }
  return evidence;
}

export function panelScenario(panel: EvidencePanel, name: string): ScenarioDoc {
  return {
    name,
    target: panel.target,
    direction: 'Causal',
    evidence: panelEvidence(panel),
  };
}
