import { describe, expect, it } from "vitest";

import { renderBiplotSvg } from "../src/biplot.js";
import { loadGolden } from "./helpers.js";

const golden = loadGolden();

// row points + column points per category in the golden payload
const EXPECTED_POINTS: Record<string, [number, number]> = {
  response: [3, 12],
  outcome: [6, 12],
  footwork: [2, 12],
  "shot-area": [6, 12],
};

function mount(svg: string): HTMLElement {
  const host = document.createElement("div");
  host.innerHTML = svg;
  return host;
}

describe("renderBiplotSvg", () => {
  it("renders all four categories with the fixture's point counts", () => {
    expect(Object.keys(golden.biplots).sort()).toEqual(Object.keys(EXPECTED_POINTS).sort());
    for (const [category, [rows, cols]] of Object.entries(EXPECTED_POINTS)) {
      const bp = golden.biplots[category]!;
      const host = mount(renderBiplotSvg(bp));
      expect(host.querySelectorAll("circle.row-point"), category).toHaveLength(rows);
      expect(host.querySelectorAll("rect.column-point"), category).toHaveLength(cols);
      expect(host.querySelectorAll("g > text"), category).toHaveLength(rows + cols);
    }
  });

  it("labels every point and carries mass and coordinates in the tooltip", () => {
    const bp = golden.biplots["response"]!;
    const host = mount(renderBiplotSvg(bp));
    const titles = Array.from(host.querySelectorAll("g > title"), (t) => t.textContent ?? "");
    expect(titles).toHaveLength(bp.points.length);
    bp.points.forEach((p, i) => {
      expect(titles[i]).toContain(p.label);
      expect(titles[i]).toContain(`mass ${p.mass}`);
      expect(titles[i]).toContain(`x ${p.x}`);
      expect(titles[i]).toContain(`y ${p.y}`);
    });
    const labels = Array.from(host.querySelectorAll("g > text"), (t) => t.textContent);
    expect(labels).toEqual(bp.points.map((p) => p.label));
  });

  it("draws the chart title only when one is given", () => {
    const bp = golden.biplots["footwork"]!;
    expect(renderBiplotSvg(bp, "A Larkin batting (footwork)")).toContain(
      "A Larkin batting (footwork)",
    );
    expect(renderBiplotSvg(bp)).not.toContain('font-size="14"');
  });

  it("escapes markup in labels and titles", () => {
    const bp = {
      category: "response",
      points: [
        { label: "<script>", side: "row" as const, category: "response", x: 0.1, y: 0.2, mass: 0.5 },
      ],
    };
    const svg = renderBiplotSvg(bp, 'a "quoted" <title>');
    expect(svg).not.toContain("<script>");
    expect(svg).toContain("&lt;script&gt;");
  });

  it("is deterministic", () => {
    const bp = golden.biplots["shot-area"]!;
    expect(renderBiplotSvg(bp)).toBe(renderBiplotSvg(bp));
  });
});
