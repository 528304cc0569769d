// Posterior distribution view: one bar per target state in the order the
// service reports them, with the prior marked as a baseline overlay and the
// delta against the prior next to each bar.

import type { DistributionDoc } from './api.js';
import { deltaPp, escapeHtml, pct3 } from './format.js';

export interface PosteriorRow {
  state: string;
  prior: number;
  posterior: number;
  delta: number;
}

export function posteriorRows(prior: DistributionDoc, posterior: DistributionDoc): PosteriorRow[] {
  return posterior.states.map((state, index) => ({
    state,
    prior: prior.probabilities[index],
    posterior: posterior.probabilities[index],
    delta: posterior.probabilities[index] - prior.probabilities[index],
  }));
}

export function renderPosterior(
  root: HTMLElement,
  prior: DistributionDoc | null,
  posterior: DistributionDoc | null,
): void {
  if (prior === null || posterior === null) {
    root.innerHTML = '<p class="empty">no posterior yet</p>';
    return;
  }
  const rows = posteriorRows(prior, posterior);
  root.innerHTML = rows
    .map((row) => {
      const fill = (row.posterior * 100).toFixed(3);
      const marker = (row.prior * 100).toFixed(3);
      const color = row.delta > 0 ? '#a33' : row.delta < 0 ? '#283' : '#667';
      return `
        <div class="bar-row" data-state="${escapeHtml(row.state)}" style="display:flex;gap:10px;align-items:center;margin:6px 0;">
          <div style="width:110px;">${escapeHtml(row.state)}</div>
          <div style="flex:1;height:12px;position:relative;background:#e8e8ef;border-radius:999px;">
            <div style="width:${fill}%;height:100%;background:#35508a;border-radius:999px;"></div>
            <div class="baseline" style="position:absolute;left:${marker}%;top:-2px;width:2px;height:16px;background:#c0392b;"></div>
          </div>
          <div class="prob" data-state="${escapeHtml(row.state)}" style="width:80px;text-align:right;">${pct3(row.posterior)}</div>
          <div class="delta" data-state="${escapeHtml(row.state)}" style="width:90px;text-align:right;color:${color};">${deltaPp(row.delta)}</div>
        </div>`;
    })
    .join('');
}
