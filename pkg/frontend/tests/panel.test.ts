import { describe, expect, it } from 'vitest';

import {
  createPanel,
  cycleSetting,
  panelEvidence,
  panelScenario,
  setFactor,
  toggleFactor,
} from '../src/panel.js';

describe('evidence panel state', () => {
  it('starts with every factor unset', () => {
    const panel = createPanel(['PE', 'WE'], 'Crash', 'very high');
    expect(panel.settings).toEqual({ PE: 'Unset', WE: 'Unset' });
    expect(panel.target).toBe('Crash');
    expect(panel.targetState).toBe('very high');
  });

  it('cycles unset to YES to NO and back', () => {
    expect(cycleSetting('Unset')).toBe('YES');
    expect(cycleSetting('YES')).toBe('NO');
    expect(cycleSetting('NO')).toBe('Unset');
  });

  it('toggle walks the full cycle on the panel', () => {
    const panel = createPanel(['PE'], 'Crash', 'very high');
    expect(toggleFactor(panel, 'PE')).toBe('YES');
    expect(toggleFactor(panel, 'PE')).toBe('NO');
    expect(toggleFactor(panel, 'PE')).toBe('Unset');
  });

  it('excludes unset factors from the evidence payload', () => {
    const panel = createPanel(['PE', 'WE', 'GL'], 'Crash', 'very high');
    setFactor(panel, 'PE', 'YES');
    setFactor(panel, 'GL', 'NO');
    expect(panelEvidence(panel)).toEqual({ PE: 'YES', GL: 'NO' });
  });

  it('keeps evidence keys in factor order', () => {
    const panel = createPanel(['WE', 'PE'], 'Crash', 'very high');
    setFactor(panel, 'PE', 'YES');
    setFactor(panel, 'WE', 'YES');
    expect(Object.keys(panelEvidence(panel))).toEqual(['WE', 'PE']);
  });

  it('rejects unknown factors', () => {
    const panel = createPanel(['PE'], 'Crash', 'very high');
    expect(() => setFactor(panel, 'XX', 'YES')).toThrow('unknown factor');
  });

  it('serializes to a causal scenario document', () => {
    const panel = createPanel(['PE', 'WE'], 'Crash', 'very high');
    setFactor(panel, 'PE', 'YES');
    expect(panelScenario(panel, 'console session')).toEqual({
      name: 'console session',
      target: 'Crash',
      direction: 'Causal',
      evidence: { PE: 'YES' },
    });
  });

  it('serializes an all-unset panel to empty evidence', () => {
    const panel = createPanel(['PE'], 'Crash', 'very high');
    expect(panelScenario(panel, 'baseline').evidence).toEqual({});
  });
});
