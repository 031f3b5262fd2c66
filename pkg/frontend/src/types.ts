// Wire format of the analysis service. Field names match the canonical JSON
// the service emits; every number the UI displays appears verbatim in one of
// these payloads.

export interface OpponentsFilter {
  mode: "all" | "players" | "class";
  players: string[];
  bowler_class: string | null;
}

export interface RankedFeature {
  feature: string;
  score: number;
}

export interface Rule {
  kind: "strength" | "weakness" | "other";
  analysis_type: "batting" | "bowling";
  anchor: string;
  category: string;
  sentence: string;
  ranked: RankedFeature[];
}

export interface RulesBlock {
  strength: Rule | null;
  weakness: Rule | null;
  others: Rule[];
  unobserved_anchors: string[];
}

export interface BiplotPoint {
  label: string;
  side: "row" | "column";
  category: string;
  x: number;
  y: number;
  mass: number;
}

export interface Biplot {
  category: string;
  points: BiplotPoint[];
}

export interface Provenance {
  player: string;
  analysis_type: "batting" | "bowling";
  opponents: OpponentsFilter;
  date_from: string | null;
  date_to: string | null;
  top_k: number;
  corpus_digest: string;
  cm_digest: string;
  records_selected: number;
  records_unmatched: number;
  excluded_opponents: string[];
  excluded_deliveries: number;
  n: number;
  row_labels: string[];
  col_labels: string[];
  dropped_rows: string[];
  dropped_cols: string[];
  singular_values: number[];
  rank: number;
  rank_deficient: boolean;
  inertia: number;
  chi_square: number;
}

export interface AnalysisResponse {
  provenance: Provenance;
  rules: RulesBlock;
  biplots: Record<string, Biplot>;
}

export interface PlayerEntry {
  player: string;
  batting_deliveries: number;
  bowling_deliveries: number;
}

export interface Health {
  status: "ok";
  records: number;
  players: number;
  date_from: string;
  date_to: string;
}

export interface ErrorBody {
  error: {
    code: string;
    message: string;
  };
}

// Query string fields of GET /analysis. `opponents` uses the service grammar:
// "all", "fast", "spin", or comma-separated player names.
export interface AnalysisQuery {
  player: string;
  type: "bat" | "bowl";
  opponents: string;
  from?: string;
  to?: string;
  top_k?: number;
}
