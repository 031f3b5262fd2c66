import { describe, expect, it, vi } from "vitest";

import {
  renderErrorPanel,
  renderNotice,
  renderProvenance,
  renderRules,
} from "../src/render.js";
import { loadGolden } from "./helpers.js";

const golden = loadGolden();

describe("renderRules", () => {
  it("shows strength and weakness tables with top-k rows and 3-decimal scores", () => {
    const rules = renderRules(golden);
    expect(rules.querySelectorAll(".rule-strength tbody tr")).toHaveLength(
      golden.provenance.top_k,
    );
    expect(rules.querySelectorAll(".rule-weakness tbody tr")).toHaveLength(
      golden.provenance.top_k,
    );
    expect(rules.querySelector(".rule-strength .rule-sentence")?.textContent).toBe(
      golden.rules.strength!.sentence,
    );
    const firstScore = rules.querySelector(".rule-strength td.score")!;
    const expected = golden.rules.strength!.ranked[0]!;
    expect(firstScore.textContent).toBe(expected.score.toFixed(3));
    expect(firstScore.getAttribute("title")).toBe(String(expected.score));
    const firstFeature = rules.querySelectorAll(".rule-strength tbody td")[1];
    expect(firstFeature?.textContent).toBe(expected.feature);
  });

  it("lists every other rule with anchor, category and sentence", () => {
    const rules = renderRules(golden);
    const rows = rules.querySelectorAll(".rule-others tbody tr");
    expect(rows).toHaveLength(golden.rules.others.length);
    const first = golden.rules.others[0]!;
    const cells = rows[0]!.querySelectorAll("td");
    expect(cells[0]?.textContent).toBe(first.anchor);
    expect(cells[1]?.textContent).toBe(first.category);
    expect(cells[3]?.textContent).toBe(first.sentence);
  });

  it("omits the card for a missing strength rule", () => {
    const degraded = structuredClone(golden);
    degraded.rules.strength = null;
    const rendered = renderRules(degraded);
    expect(rendered.querySelector(".rule-strength")).toBeNull();
    expect(rendered.querySelector(".rule-weakness")).not.toBeNull();
  });

  it("is deterministic", () => {
    expect(renderRules(golden).outerHTML).toBe(renderRules(golden).outerHTML);
  });
});

describe("renderNotice", () => {
  it("lists the fixture's dropped row features", () => {
    const notice = renderNotice(golden)!;
    expect(notice).not.toBeNull();
    expect(notice.textContent).toContain("3 run");
    expect(notice.textContent).toContain("5 run");
  });

  it("returns null when nothing was dropped", () => {
    const clean = structuredClone(golden);
    clean.provenance.dropped_rows = [];
    clean.provenance.dropped_cols = [];
    clean.rules.unobserved_anchors = [];
    expect(renderNotice(clean)).toBeNull();
  });

  it("mentions unobserved anchors", () => {
    const degraded = structuredClone(golden);
    degraded.rules.unobserved_anchors = ["attacked"];
    expect(renderNotice(degraded)!.textContent).toContain("anchors without rules: attacked");
  });
});

describe("renderProvenance", () => {
  it("reports player, record count and inertia with full precision on hover", () => {
    const line = renderProvenance(golden);
    expect(line.textContent).toContain("A Larkin batting");
    expect(line.textContent).toContain("400 deliveries");
    expect(line.textContent).toContain(`n=${golden.provenance.n}`);
    const inertia = line.querySelector(".inertia")!;
    expect(inertia.textContent).toBe(golden.provenance.inertia.toFixed(4));
    expect(inertia.getAttribute("title")).toBe(String(golden.provenance.inertia));
  });

  it("shows the date window when one was set", () => {
    const windowed = structuredClone(golden);
    windowed.provenance.date_from = "2018-01-01";
    const line = renderProvenance(windowed);
    expect(line.textContent).toContain("(2018-01-01 to end)");
  });
});

describe("renderErrorPanel", () => {
  it.each(["UNKNOWN_PLAYER", "EMPTY_SELECTION", "RANK_ZERO", "INVALID_FILTER"])(
    "renders a panel carrying the %s code",
    (code) => {
      const panel = renderErrorPanel(code, "something went wrong");
      expect(panel.dataset.code).toBe(code);
      expect(panel.querySelector(".error-code")?.textContent).toBe(code);
      expect(panel.querySelector(".error-message")?.textContent).toBe("something went wrong");
      expect(panel.querySelector("button.retry")).toBeNull();
    },
  );

  it("wires the retry button when a handler is given", () => {
    const onRetry = vi.fn();
    const panel = renderErrorPanel("NETWORK", "request failed", onRetry);
    const button = panel.querySelector("button.retry") as HTMLButtonElement;
    button.click();
    expect(onRetry).toHaveBeenCalledTimes(1);
  });
});
