// Display formatting. Probabilities are shown to three decimals as
// percentages; deltas against the prior are shown in percentage points.

export function pct3(probability: number): string {
  return `${(probability * 100).toFixed(3)}%`;
}

export function deltaPp(delta: number): string {
  const text = (delta * 100).toFixed(3);
  if (text === '0.000' || text === '-0.000') {
    return '0.000pp';
  }
  return `${delta > 0 ? '+' : ''}${text}pp`;
}

export function escapeHtml(value: string): string {
  return value
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;')
    .replaceAll("'", '&#39;');
}
