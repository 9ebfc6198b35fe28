// DOM view builders for the three drill-down levels. Views render payload
// values verbatim (String(value) straight from the API); they never do
// arithmetic on analysis results.

import {
  EntityDetail,
  FeatureDetail,
  FeatureSummary,
  FileDetail,
  FindingPayload,
} from "./api.js";
import { entityHash, featureHash, fileHash } from "./router.js";

export const SMELL_TYPES = [
  "GodClass",
  "BrainClass",
  "DataClass",
  "BrainMethod",
  "ConditionalComplexity",
  "LongMethod",
  "FeatureEnvy",
];

const METHOD_METRIC_ORDER = [
  "MLOC",
  "CYCLO",
  "MAXNESTING",
  "NOAV",
  "NOP",
  "ATFD",
  "FDP",
  "LAA",
  "FANOUT",
];

const CLASS_METRIC_ORDER = [
  "CLOC",
  "WMC",
  "NOM",
  "NOA",
  "NOPA",
  "NOAM",
  "TCC",
  "WOC",
  "AMW",
  "ATFD",
];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function link(href: string, text: string, className?: string): HTMLAnchorElement {
  const a = el("a", className, text);
  a.href = href;
  return a;
}

export function renderErrorBanner(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const banner = el("div", "error-banner");
  banner.setAttribute("role", "alert");
  banner.textContent = message;
  container.appendChild(banner);
}

export function renderNotFound(container: HTMLElement, what: string): void {
  container.replaceChildren();
  const box = el("div", "not-found");
  box.appendChild(el("h2", undefined, "Not found"));
  box.appendChild(el("p", undefined, `${what} does not exist in this report.`));
  box.appendChild(link("#/features", "Back to features", "back-link"));
  container.appendChild(box);
}

export interface TableState {
  sortKey: "total" | "name";
  sortAsc: boolean;
  filter: string;
}

export function renderFeatureTable(
  container: HTMLElement,
  features: FeatureSummary[],
  state: TableState = { sortKey: "total", sortAsc: false, filter: "" },
): void {
  container.replaceChildren();
  container.appendChild(el("h2", undefined, "Features by technical debt"));

  const filterInput = el("input", "feature-filter");
  filterInput.type = "search";
  filterInput.placeholder = "Filter by name";
  filterInput.value = state.filter;
  filterInput.addEventListener("input", () => {
    renderFeatureTable(container, features, {
      ...state,
      filter: filterInput.value,
    });
    const again = container.querySelector<HTMLInputElement>(".feature-filter");
    again?.focus();
  });
  container.appendChild(filterInput);

  if (features.length === 0) {
    container.appendChild(
      el("p", "empty-state", "No features in this report."),
    );
    return;
  }

  const needle = state.filter.trim().toLowerCase();
  const visible = features.filter(
    (f) => !needle || f.name.toLowerCase().includes(needle),
  );
  const sorted = [...visible].sort((a, b) => {
    const cmp =
      state.sortKey === "total"
        ? a.total - b.total
        : a.name.localeCompare(b.name);
    return state.sortAsc ? cmp : -cmp;
  });

  const table = el("table", "feature-table");
  const head = el("tr");
  for (const [label, key] of [
    ["Feature", "name"],
    ["Debt", "total"],
  ] as const) {
    const th = el("th", `sort-${key}`, label);
    th.addEventListener("click", () => {
      renderFeatureTable(container, features, {
        ...state,
        sortKey: key,
        sortAsc: state.sortKey === key ? !state.sortAsc : key === "name",
      });
    });
    head.appendChild(th);
  }
  head.appendChild(el("th", undefined, "Files"));
  head.appendChild(el("th", undefined, "Entry point"));
  table.appendChild(head);

  for (const feature of sorted) {
    const row = el("tr", "feature-row");
    row.dataset.featureId = feature.id;
    const nameCell = el("td", "feature-name");
    nameCell.appendChild(link(featureHash(feature.id), feature.name));
    row.appendChild(nameCell);
    row.appendChild(el("td", "feature-total", String(feature.total)));
    row.appendChild(el("td", "feature-files", String(feature.file_count)));
    row.appendChild(el("td", "feature-main", feature.main_method));
    table.appendChild(row);
  }
  container.appendChild(table);

  if (visible.length === 0) {
    container.appendChild(el("p", "empty-state", "No features match the filter."));
  }
}

function findingsList(findings: FindingPayload[]): HTMLElement {
  const list = el("ul", "finding-list");
  for (const finding of findings) {
    const item = el("li", "finding");
    item.appendChild(el("span", "finding-type", finding.type));
    item.appendChild(el("span", "finding-entity", finding.entity_key));
    const evidence = el("span", "finding-evidence");
    evidence.textContent = Object.entries(finding.evidence)
      .map(([metric, value]) => `${metric}=${String(value)}`)
      .join(" ");
    item.appendChild(evidence);
    list.appendChild(item);
  }
  return list;
}

export function renderFeatureDetail(
  container: HTMLElement,
  feature: FeatureDetail,
): void {
  container.replaceChildren();
  container.appendChild(el("h2", undefined, feature.name));
  container.appendChild(link("#/features", "← all features", "back-link"));

  const summary = el("p", "feature-summary");
  summary.appendChild(el("span", "controller", feature.controller));
  summary.appendChild(el("span", "main-method", feature.main_method));
  container.appendChild(summary);
  container.appendChild(
    el("p", "feature-total-line", `Total debt: `),
  );
  container
    .querySelector(".feature-total-line")!
    .appendChild(el("strong", "feature-total", String(feature.total)));

  container.appendChild(el("h3", undefined, "By smell type"));
  const typeTable = el("table", "type-table");
  for (const type of SMELL_TYPES) {
    const row = el("tr", "type-row");
    row.dataset.type = type;
    row.appendChild(el("td", "type-name", type));
    row.appendChild(el("td", "type-count", String(feature.per_type[type] ?? 0)));
    typeTable.appendChild(row);
  }
  container.appendChild(typeTable);

  container.appendChild(el("h3", undefined, "Files"));
  const fileTable = el("table", "file-table");
  for (const path of feature.files) {
    const row = el("tr", "file-row");
    row.dataset.path = path;
    const cell = el("td", "file-path");
    cell.appendChild(link(fileHash(path), path));
    row.appendChild(cell);
    row.appendChild(el("td", "file-count", String(feature.per_file[path] ?? 0)));
    fileTable.appendChild(row);
  }
  container.appendChild(fileTable);
}

export function renderFileDetail(container: HTMLElement, file: FileDetail): void {
  container.replaceChildren();
  container.appendChild(el("h2", undefined, file.path));
  container.appendChild(link("#/features", "← all features", "back-link"));

  const facts = el("p", "file-facts");
  facts.appendChild(el("span", "file-package", file.package));
  facts.appendChild(el("span", "file-loc", `${String(file.loc)} LOC`));
  if (file.parse_gaps > 0) {
    facts.appendChild(
      el("span", "file-gaps", `${String(file.parse_gaps)} parse gaps`),
    );
  }
  container.appendChild(facts);

  container.appendChild(el("h3", undefined, "Findings"));
  if (file.findings.length === 0) {
    container.appendChild(el("p", "no-findings", "No smells in this file."));
  } else {
    container.appendChild(findingsList(file.findings));
  }

  container.appendChild(el("h3", undefined, "Entities"));
  const list = el("ul", "entity-list");
  for (const key of file.entities) {
    const item = el("li", "entity");
    item.appendChild(link(entityHash(key), key));
    list.appendChild(item);
  }
  container.appendChild(list);
}

export function renderEntityDetail(
  container: HTMLElement,
  entity: EntityDetail,
): void {
  container.replaceChildren();
  container.appendChild(el("h2", undefined, entity.key));
  container.appendChild(link(fileHash(entity.file), `in ${entity.file}`, "back-link"));

  const order = entity.scope === "method" ? METHOD_METRIC_ORDER : CLASS_METRIC_ORDER;
  container.appendChild(el("h3", undefined, "Metrics"));
  const table = el("table", "metric-table");
  for (const name of order) {
    if (!(name in entity.metrics)) continue;
    const row = el("tr", "metric-row");
    row.dataset.metric = name;
    row.appendChild(el("td", "metric-name", name));
    row.appendChild(el("td", "metric-value", String(entity.metrics[name])));
    table.appendChild(row);
  }
  container.appendChild(table);

  container.appendChild(el("h3", undefined, "Smells"));
  if (entity.findings.length === 0) {
    container.appendChild(el("p", "no-smells", "No smells on this entity."));
  } else {
    container.appendChild(findingsList(entity.findings));
  }
}
