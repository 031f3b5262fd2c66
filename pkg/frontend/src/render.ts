import type { AnalysisResponse, Rule } from "./types.js";

// DOM builders, each a pure function of the payload: same response, same DOM.
// Scores show 3 decimal places in the cell; the title attribute keeps full
// precision for hover.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function scoreCell(score: number): HTMLTableCellElement {
  const td = el("td", "score", score.toFixed(3));
  td.title = String(score);
  return td;
}

function ruleCard(rule: Rule, heading: string, topK: number): HTMLElement {
  const card = el("section", `rule-card rule-${rule.kind}`);
  card.appendChild(el("h3", "", heading));
  card.appendChild(el("p", "rule-sentence", rule.sentence));
  const table = el("table", "rule-table");
  const head = table.createTHead().insertRow();
  head.appendChild(el("th", "", "rank"));
  head.appendChild(el("th", "", "feature"));
  head.appendChild(el("th", "", "score"));
  const body = table.createTBody();
  rule.ranked.slice(0, topK).forEach((entry, i) => {
    const tr = body.insertRow();
    tr.appendChild(el("td", "", String(i + 1)));
    tr.appendChild(el("td", "", entry.feature));
    tr.appendChild(scoreCell(entry.score));
  });
  card.appendChild(table);
  return card;
}

export function renderRules(response: AnalysisResponse): HTMLElement {
  const { rules, provenance } = response;
  const wrap = el("div", "rules");
  if (rules.strength) {
    wrap.appendChild(ruleCard(rules.strength, "Strength", provenance.top_k));
  }
  if (rules.weakness) {
    wrap.appendChild(ruleCard(rules.weakness, "Weakness", provenance.top_k));
  }
  if (rules.others.length) {
    const section = el("section", "rule-card rule-others");
    section.appendChild(el("h3", "", "Other associations"));
    const table = el("table", "others-table");
    const head = table.createTHead().insertRow();
    head.appendChild(el("th", "", "anchor"));
    head.appendChild(el("th", "", "category"));
    head.appendChild(el("th", "", "top match"));
    head.appendChild(el("th", "", "rule"));
    const body = table.createTBody();
    for (const rule of rules.others) {
      const tr = body.insertRow();
      tr.appendChild(el("td", "", rule.anchor));
      tr.appendChild(el("td", "", rule.category));
      const top = rule.ranked[0];
      if (top) {
        const td = el("td", "score", `${top.feature} (${top.score.toFixed(3)})`);
        td.title = String(top.score);
        tr.appendChild(td);
      } else {
        tr.appendChild(el("td", "score", ""));
      }
      tr.appendChild(el("td", "", rule.sentence));
    }
    section.appendChild(table);
    wrap.appendChild(section);
  }
  return wrap;
}

/** Dropped and unobserved features, or null when nothing was dropped. */
export function renderNotice(response: AnalysisResponse): HTMLElement | null {
  const { provenance, rules } = response;
  const items: string[] = [];
  if (provenance.dropped_rows.length) {
    items.push(`unobserved row features: ${provenance.dropped_rows.join(", ")}`);
  }
  if (provenance.dropped_cols.length) {
    items.push(`unobserved column features: ${provenance.dropped_cols.join(", ")}`);
  }
  if (rules.unobserved_anchors.length) {
    items.push(`anchors without rules: ${rules.unobserved_anchors.join(", ")}`);
  }
  if (!items.length) {
    return null;
  }
  const notice = el("div", "notice");
  for (const item of items) {
    notice.appendChild(el("p", "", item));
  }
  return notice;
}

export function renderProvenance(response: AnalysisResponse): HTMLElement {
  const p = response.provenance;
  const line = el("p", "provenance-line");
  const window =
    p.date_from || p.date_to
      ? ` (${p.date_from ?? "start"} to ${p.date_to ?? "end"})`
      : "";
  line.appendChild(
    el(
      "span",
      "",
      `${p.player} ${p.analysis_type}${window}: ` +
        `${p.records_selected} deliveries, n=${p.n}, rank ${p.rank}, inertia `,
    ),
  );
  const inertia = el("span", "inertia", p.inertia.toFixed(4));
  inertia.title = String(p.inertia);
  line.appendChild(inertia);
  return line;
}

/** Explicit error panel; shown in place of the chart, never a blank plot. */
export function renderErrorPanel(
  code: string,
  message: string,
  onRetry?: () => void,
): HTMLElement {
  const panel = el("div", "error-panel");
  panel.dataset.code = code;
  panel.appendChild(el("strong", "error-code", code));
  panel.appendChild(el("p", "error-message", message));
  if (onRetry) {
    const button = el("button", "retry", "Retry");
    button.type = "button";
    button.addEventListener("click", onRetry);
    panel.appendChild(button);
  }
  return panel;
}
