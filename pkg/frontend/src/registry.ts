// Hazard registry table: recorded probability, severity, risk level and PLr
// per hazard, sortable by column, with rows flagged by the validation
// endpoint highlighted and annotated with the expected value.

import type { HazardDoc, RegistryDoc, ValidationDoc, ViolationDoc } from './api.js';
import { escapeHtml } from './format.js';

export type SortKey = 'id' | 'name' | 'source' | 'probability' | 'severity' | 'risk_level' | 'plr';

export interface RegistrySort {
  key: SortKey;
  ascending: boolean;
}

const PROBABILITY_ORDER = ['Improbable', 'Remote', 'Occasional', 'Probable', 'Frequent'];
const SEVERITY_ORDER = ['Negligible', 'Marginal', 'Critical', 'Catastrophic'];
const RISK_ORDER = ['Low', 'Medium', 'Serious', 'High'];

const COLUMNS: { key: SortKey; label: string }[] = [
  { key: 'id', label: 'id' },
  { key: 'name', label: 'hazard' },
  { key: 'source', label: 'source' },
  { key: 'probability', label: 'probability' },
  { key: 'severity', label: 'severity' },
  { key: 'risk_level', label: 'risk level' },
  { key: 'plr', label: 'PLr' },
];

export function hazardPlr(hazard: HazardDoc): string {
  const grades = hazard.measures
    .map((measure) => measure.plr)
    .filter((plr): plr is string => plr !== undefined);
  const distinct = [...new Set(grades)];
  return distinct.length > 0 ? distinct.join(', ') : '-';
}

function ordinal(value: string, order: string[]): number {
  const index = order.indexOf(value);
  return index === -1 ? order.length : index;
}

function sortValue(hazard: HazardDoc, key: SortKey): number | string {
  switch (key) {
    case 'id':
      return hazard.id;
    case 'name':
      return hazard.name;
    case 'source':
      return hazard.source;
    case 'probability':
      return ordinal(hazard.probability, PROBABILITY_ORDER);
    case 'severity':
      return ordinal(hazard.severity, SEVERITY_ORDER);
    case 'risk_level':
      return ordinal(hazard.risk_level, RISK_ORDER);
    case 'plr':
      return hazardPlr(hazard);
  }
}

export function sortHazards(hazards: HazardDoc[], sort: RegistrySort): HazardDoc[] {
  return [...hazards].sort((a, b) => {
    const left = sortValue(a, sort.key);
    const right = sortValue(b, sort.key);
    let cmp = 0;
    if (left < right) cmp = -1;
    else if (left > right) cmp = 1;
    if (cmp === 0) cmp = a.id - b.id;
    return sort.ascending ? cmp : -cmp;
  });
}

function cellText(hazard: HazardDoc, key: SortKey): string {
  if (key === 'plr') return hazardPlr(hazard);
  if (key === 'id') return String(hazard.id);
  return String(hazard[key]);
}

function expectedNote(violations: ViolationDoc[], key: SortKey): string {
  const hits = violations.filter((v) => v.field === key && v.expected != null);
  if (hits.length === 0) return '';
  return hits
    .map((v) => `<span class="expected" style="color:#c0392b;"> expected ${escapeHtml(v.expected as string)}</span>`)
    .join('');
}

export function renderRegistry(
  root: HTMLElement,
  doc: RegistryDoc | null,
  validation?: ValidationDoc | null,
  sort?: RegistrySort,
): void {
  if (doc === null || doc.hazards.length === 0) {
    root.innerHTML = '<p class="empty">the registry has no hazards</p>';
    return;
  }
  const order: RegistrySort = sort ?? { key: 'id', ascending: true };
  const byRecord = new Map<number, ViolationDoc[]>();
  for (const violation of validation?.violations ?? []) {
    if (violation.record_id != null) {
      const bucket = byRecord.get(violation.record_id) ?? [];
      bucket.push(violation);
      byRecord.set(violation.record_id, bucket);
    }
  }
  const header = COLUMNS.map((column) => {
    const arrow = column.key === order.key ? (order.ascending ? ' ↑' : ' ↓') : '';
    return `<th data-key="${column.key}" style="text-align:left;cursor:pointer;padding:4px 8px;border-bottom:2px solid #99a;">${escapeHtml(column.label)}${arrow}</th>`;
  }).join('');
  const body = sortHazards(doc.hazards, order)
    .map((hazard) => {
      const violations = byRecord.get(hazard.id) ?? [];
      const flagged = violations.length > 0;
      const rowStyle = flagged ? 'background:#fbe4e1;' : '';
      const cells = COLUMNS.map((column) => {
        const note = expectedNote(violations, column.key);
        return `<td style="padding:4px 8px;border-bottom:1px solid #dde;">${escapeHtml(cellText(hazard, column.key))}${note}</td>`;
      }).join('');
      return `<tr data-id="${hazard.id}" class="${flagged ? 'violation' : ''}" style="${rowStyle}">${cells}</tr>`;
    })
    .join('');
  const issues = validation && !validation.valid
    ? `<p class="violations" style="color:#c0392b;">${validation.violations.length} validation issue(s)</p>`
    : '';
  root.innerHTML = `
    ${issues}
    <table style="border-collapse:collapse;width:100%;">
      <thead><tr>${header}</tr></thead>
      <tbody>${body}</tbody>
    </table>`;
  root.onclick = (event) => {
    const th = (event.target as HTMLElement).closest('th[data-key]');
    if (!(th instanceof HTMLElement) || !th.dataset.key) return;
    const key = th.dataset.key as SortKey;
    const ascending = key === order.key ? !order.ascending : true;
    renderRegistry(root, doc, validation, { key, ascending });
  };
}
