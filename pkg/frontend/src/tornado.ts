// Tornado chart: one horizontal bar per sensitivity node spanning the low to
// high envelope of the target-state probability, sorted by bar length with
// the longest on top, plus a vertical marker at the baseline marginal.

import type { TornadoDoc, TornadoRowDoc } from './api.js';
import { escapeHtml, pct3 } from './format.js';

export function sortedRows(rows: TornadoRowDoc[]): TornadoRowDoc[] {
  return [...rows].sort((a, b) => {
    if (b.bar_length !== a.bar_length) {
      return b.bar_length - a.bar_length;
    }
    return a.node < b.node ? -1 : a.node > b.node ? 1 : 0;
  });
}

export function renderTornado(root: HTMLElement, doc: TornadoDoc | null, message?: string): void {
  if (doc === null || doc.rows.length === 0) {
    root.innerHTML = `<p class="empty">${escapeHtml(message ?? 'no sensitivity nodes selected')}</p>`;
    return;
  }
  const rows = sortedRows(doc.rows);
  const baselineLeft = (doc.baseline * 100).toFixed(3);
  const bars = rows
    .map((row) => {
      const left = (row.low * 100).toFixed(3);
      const width = ((row.high - row.low) * 100).toFixed(3);
      const point = row.bar_length === 0 ? ' point' : '';
      return `
        <div class="tornado-row${point}" data-node="${escapeHtml(row.node)}" data-length="${row.bar_length.toFixed(6)}" style="display:flex;gap:10px;align-items:center;margin:6px 0;">
          <div style="width:140px;">${escapeHtml(row.node)}</div>
          <div style="flex:1;position:relative;height:14px;background:#e8e8ef;">
            <div class="span" style="position:absolute;left:${left}%;width:${width}%;min-width:2px;height:100%;background:#35508a;"></div>
            <div class="baseline" style="position:absolute;left:${baselineLeft}%;top:-2px;width:2px;height:18px;background:#c0392b;"></div>
          </div>
          <div class="range" style="width:170px;text-align:right;">${pct3(row.low)} to ${pct3(row.high)}</div>
        </div>`;
    })
    .join('');
  root.innerHTML = `
    <p style="margin:4px 0;">P(${escapeHtml(doc.target)} = ${escapeHtml(doc.target_state)}), baseline ${pct3(doc.baseline)}</p>
    ${bars}`;
}
