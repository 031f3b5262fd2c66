import { ApiClient, ApiError, DEFAULT_API_BASE, RequestSequencer } from "./api.js";
import { renderBiplotSvg } from "./biplot.js";
import { el, renderErrorPanel, renderNotice, renderProvenance, renderRules } from "./render.js";
import type { AnalysisQuery, AnalysisResponse } from "./types.js";

declare global {
  interface Window {
    CRICRULES_API_BASE?: string;
  }
}

// Preferred tab order; categories missing from a response are skipped and
// unknown ones are appended in payload order.
export const CATEGORY_ORDER = ["response", "outcome", "footwork", "shot-area"] as const;

export interface ViewState {
  player: string;
  analysisType: "bat" | "bowl";
  opponentClass: string;
  opponentNames: string;
  dateFrom: string;
  dateTo: string;
  topK: number;
  activeCategory: string;
  last: AnalysisResponse | null;
}

export interface AppHandles {
  state: ViewState;
  refresh: () => Promise<void>;
  ready: Promise<void>;
  root: HTMLElement;
}

function orderedCategories(response: AnalysisResponse): string[] {
  const present = Object.keys(response.biplots);
  const known = CATEGORY_ORDER.filter((c) => present.includes(c));
  const extra = present.filter((c) => !(CATEGORY_ORDER as readonly string[]).includes(c));
  return [...known, ...extra];
}

function labelled(text: string, control: HTMLElement): HTMLLabelElement {
  const label = el("label", "control", text);
  label.appendChild(control);
  return label;
}

export function initApp(root: HTMLElement, client: ApiClient): AppHandles {
  const state: ViewState = {
    player: "",
    analysisType: "bat",
    opponentClass: "all",
    opponentNames: "",
    dateFrom: "",
    dateTo: "",
    topK: 3,
    activeCategory: CATEGORY_ORDER[0],
    last: null,
  };
  const sequencer = new RequestSequencer();

  const playerSelect = el("select", "player-select");
  const typeSelect = el("select", "type-select");
  for (const [value, text] of [
    ["bat", "batting"],
    ["bowl", "bowling"],
  ] as const) {
    const option = el("option", "", text);
    option.value = value;
    typeSelect.appendChild(option);
  }
  const opponentsSelect = el("select", "opponents-select");
  for (const value of ["all", "fast", "spin"]) {
    const option = el("option", "", value);
    option.value = value;
    opponentsSelect.appendChild(option);
  }
  const namesInput = el("input", "opponent-names");
  namesInput.type = "text";
  namesInput.placeholder = "comma-separated names";
  const fromInput = el("input", "date-from");
  fromInput.type = "date";
  const toInput = el("input", "date-to");
  toInput.type = "date";
  const topKInput = el("input", "top-k");
  topKInput.type = "number";
  topKInput.min = "1";
  topKInput.value = String(state.topK);

  const controls = el("form", "controls");
  controls.addEventListener("submit", (event) => event.preventDefault());
  controls.appendChild(labelled("player", playerSelect));
  controls.appendChild(labelled("analysis", typeSelect));
  controls.appendChild(labelled("opponents", opponentsSelect));
  controls.appendChild(labelled("specific opponents", namesInput));
  controls.appendChild(labelled("from", fromInput));
  controls.appendChild(labelled("to", toInput));
  controls.appendChild(labelled("top k", topKInput));

  const status = el("p", "status", "loading players");
  const provenance = el("div", "provenance");
  const tabs = el("nav", "category-tabs");
  const chart = el("div", "chart");
  const details = el("div", "details");

  const main = el("div", "main-panel");
  main.appendChild(status);
  main.appendChild(provenance);
  main.appendChild(tabs);
  main.appendChild(chart);
  main.appendChild(details);

  root.innerHTML = "";
  root.appendChild(controls);
  root.appendChild(main);

  function currentOpponents(): string {
    const names = state.opponentNames.trim();
    return names ? names : state.opponentClass;
  }

  async function refresh(): Promise<void> {
    if (!state.player) {
      return;
    }
    const { ticket, signal } = sequencer.begin();
    status.textContent = "loading";
    const query: AnalysisQuery = {
      player: state.player,
      type: state.analysisType,
      opponents: currentOpponents(),
    };
    if (state.dateFrom) query.from = state.dateFrom;
    if (state.dateTo) query.to = state.dateTo;
    if (state.topK >= 1) query.top_k = state.topK;
    try {
      const response = await client.analysis(query, signal);
      if (!sequencer.isCurrent(ticket)) {
        return;
      }
      state.last = response;
      renderResult();
    } catch (err) {
      if (!sequencer.isCurrent(ticket)) {
        return;
      }
      state.last = null;
      renderFailure(err);
    }
  }

  // Everything below the controls is redrawn from state.last in one pass, so
  // rules, notice and chart always come from the same response.
  function renderResult(): void {
    const response = state.last;
    if (!response) {
      return;
    }
    status.textContent = "";
    provenance.innerHTML = "";
    provenance.appendChild(renderProvenance(response));
    renderTabs();
    renderChart();
    details.innerHTML = "";
    const notice = renderNotice(response);
    if (notice) {
      details.appendChild(notice);
    }
    details.appendChild(renderRules(response));
  }

  function renderTabs(): void {
    const response = state.last;
    if (!response) {
      tabs.innerHTML = "";
      return;
    }
    const categories = orderedCategories(response);
    const first = categories[0];
    if (!categories.includes(state.activeCategory) && first !== undefined) {
      state.activeCategory = first;
    }
    tabs.innerHTML = "";
    for (const category of categories) {
      const button = el(
        "button",
        category === state.activeCategory ? "tab active" : "tab",
        category,
      );
      button.type = "button";
      button.dataset.category = category;
      // Tab switches redraw from state.last only; no request is issued.
      button.addEventListener("click", () => {
        state.activeCategory = category;
        renderTabs();
        renderChart();
      });
      tabs.appendChild(button);
    }
  }

  function renderChart(): void {
    const response = state.last;
    if (!response) {
      chart.innerHTML = "";
      return;
    }
    const bp = response.biplots[state.activeCategory];
    chart.innerHTML = bp
      ? renderBiplotSvg(bp, `${response.provenance.player} ${response.provenance.analysis_type} (${bp.category})`)
      : "";
  }

  function renderFailure(err: unknown): void {
    status.textContent = "error";
    provenance.innerHTML = "";
    tabs.innerHTML = "";
    details.innerHTML = "";
    chart.innerHTML = "";
    if (err instanceof ApiError) {
      chart.appendChild(renderErrorPanel(err.code, err.message));
    } else {
      const message = err instanceof Error ? err.message : String(err);
      chart.appendChild(
        renderErrorPanel("NETWORK", `request failed: ${message}`, () => {
          void refresh();
        }),
      );
    }
  }

  playerSelect.addEventListener("change", () => {
    state.player = playerSelect.value;
    void refresh();
  });
  typeSelect.addEventListener("change", () => {
    state.analysisType = typeSelect.value === "bowl" ? "bowl" : "bat";
    void refresh();
  });
  opponentsSelect.addEventListener("change", () => {
    state.opponentClass = opponentsSelect.value;
    state.opponentNames = "";
    namesInput.value = "";
    void refresh();
  });
  namesInput.addEventListener("change", () => {
    state.opponentNames = namesInput.value;
    void refresh();
  });
  fromInput.addEventListener("change", () => {
    state.dateFrom = fromInput.value;
    void refresh();
  });
  toInput.addEventListener("change", () => {
    state.dateTo = toInput.value;
    void refresh();
  });
  topKInput.addEventListener("change", () => {
    const parsed = Number.parseInt(topKInput.value, 10);
    if (Number.isFinite(parsed) && parsed >= 1) {
      state.topK = parsed;
      void refresh();
    }
  });

  async function loadPlayers(): Promise<void> {
    status.textContent = "loading players";
    try {
      const players = await client.players();
      playerSelect.innerHTML = "";
      for (const entry of players) {
        const option = el(
          "option",
          "",
          `${entry.player} (${entry.batting_deliveries} bat / ${entry.bowling_deliveries} bowl)`,
        );
        option.value = entry.player;
        playerSelect.appendChild(option);
      }
      const first = players[0];
      if (!first) {
        status.textContent = "no players in corpus";
        return;
      }
      playerSelect.value = first.player;
      state.player = first.player;
      await refresh();
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      chart.innerHTML = "";
      chart.appendChild(
        renderErrorPanel("NETWORK", `player list failed: ${message}`, () => {
          void loadPlayers();
        }),
      );
      status.textContent = "error";
    }
  }

  const ready = loadPlayers();
  return { state, refresh, ready, root };
}

function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) {
    return;
  }
  const base = window.CRICRULES_API_BASE ?? DEFAULT_API_BASE;
  initApp(root, new ApiClient(base));
}

bootstrap();
