import { readFileSync } from "node:fs";
import { resolve } from "node:path";

import type { AnalysisResponse } from "../src/types.js";

// The committed golden payload the backend suite also verifies byte-for-byte.
// vitest runs with the package directory as cwd; the fixture lives one level up.
export function loadGolden(): AnalysisResponse {
  const path = resolve(process.cwd(), "..", "tests", "fixtures", "golden_analysis.json");
  return JSON.parse(readFileSync(path, "utf8")) as AnalysisResponse;
}
