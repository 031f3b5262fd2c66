import type { Biplot } from "./types.js";

// Mirrors the SVG the CLI exports: blue circles for row points, red squares
// for column points, grey zero axes, labels offset up-right. The browser
// version adds class names and <title> tooltips carrying mass and the
// untruncated coordinates.

const PLOT = {
  width: 640,
  height: 480,
  margin: 56,
  rowColor: "#1f77b4",
  columnColor: "#d62728",
} as const;

function num(value: number): string {
  return value.toFixed(2);
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderBiplotSvg(bp: Biplot, title = ""): string {
  const xs = bp.points.map((p) => p.x).concat([0]);
  const ys = bp.points.map((p) => p.y).concat([0]);
  let xmin = Math.min(...xs);
  let xmax = Math.max(...xs);
  let ymin = Math.min(...ys);
  let ymax = Math.max(...ys);
  const xpad = (xmax - xmin) * 0.1 || 1;
  const ypad = (ymax - ymin) * 0.1 || 1;
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  const sx = (x: number): number =>
    PLOT.margin + ((x - xmin) / (xmax - xmin)) * (PLOT.width - 2 * PLOT.margin);
  const sy = (y: number): number =>
    PLOT.height - PLOT.margin - ((y - ymin) / (ymax - ymin)) * (PLOT.height - 2 * PLOT.margin);

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${PLOT.width}" height="${PLOT.height}" ` +
      `viewBox="0 0 ${PLOT.width} ${PLOT.height}" role="img">`,
    `<rect x="0" y="0" width="${PLOT.width}" height="${PLOT.height}" fill="white"/>`,
    `<line x1="${num(sx(xmin))}" y1="${num(sy(0))}" ` +
      `x2="${num(sx(xmax))}" y2="${num(sy(0))}" stroke="#cccccc"/>`,
    `<line x1="${num(sx(0))}" y1="${num(sy(ymin))}" ` +
      `x2="${num(sx(0))}" y2="${num(sy(ymax))}" stroke="#cccccc"/>`,
  ];
  if (title) {
    parts.push(
      `<text x="${PLOT.width / 2}" y="24" text-anchor="middle" font-size="14">` +
        `${esc(title)}</text>`,
    );
  }
  for (const p of bp.points) {
    const px = sx(p.x);
    const py = sy(p.y);
    const tip = `${p.label}: mass ${p.mass}, x ${p.x}, y ${p.y}`;
    const marker =
      p.side === "row"
        ? `<circle class="row-point" cx="${num(px)}" cy="${num(py)}" r="4" fill="${PLOT.rowColor}"/>`
        : `<rect class="column-point" x="${num(px - 3.5)}" y="${num(py - 3.5)}" ` +
          `width="7" height="7" fill="${PLOT.columnColor}"/>`;
    parts.push(
      `<g><title>${esc(tip)}</title>${marker}` +
        `<text x="${num(px + 6)}" y="${num(py - 6)}" font-size="11">${esc(p.label)}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
