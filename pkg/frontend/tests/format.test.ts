import { describe, expect, it } from 'vitest';

import { deltaPp, escapeHtml, pct3 } from '../src/format.js';

describe('percentage formatting', () => {
  it('shows three decimals', () => {
    expect(pct3(0.1477)).toBe('14.770%');
    expect(pct3(0.16918)).toBe('16.918%');
    expect(pct3(0)).toBe('0.000%');
    expect(pct3(1)).toBe('100.000%');
  });

  it('rounds to the third decimal', () => {
    expect(pct3(0.1234567)).toBe('12.346%');
  });
});

describe('delta formatting', () => {
  it('signs positive deltas', () => {
    expect(deltaPp(0.02148)).toBe('+2.148pp');
  });

  it('signs negative deltas with a plain hyphen', () => {
    expect(deltaPp(-0.001)).toBe('-0.100pp');
  });

  it('shows exact zero without a sign', () => {
    expect(deltaPp(0)).toBe('0.000pp');
  });

  it('treats deltas below display precision as zero', () => {
    expect(deltaPp(1e-9)).toBe('0.000pp');
    expect(deltaPp(-1e-9)).toBe('0.000pp');
  });
});

describe('html escaping', () => {
  it('escapes markup characters', () => {
    expect(escapeHtml('<b a="c">&\'')).toBe('&lt;b a=&quot;c&quot;&gt;&amp;&#39;');
  });
});
