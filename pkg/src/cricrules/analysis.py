"""End-to-end analysis pipeline shared by the CLI and the HTTP service.

Both entry points build the same payload dictionary and serialize it with the
canonical JSON encoder, so their outputs are byte-identical for the same
request against the same corpus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date as Date

from .ca import correspondence_analysis
from .confrontation import FilterTuple, Opponents, build_cm, filter_deliveries
from .corpus import Corpus
from .errors import AnchorUnobserved, InvalidFilter
from .features import BATTING_FEATURES, CATEGORY_ORDER
from .lexicon import FeatureLexicon
from .rules import (
    STRENGTH_ANCHOR,
    WEAKNESS_ANCHOR,
    biplot,
    biplot_payload,
    mine_other_rules,
    mine_rule,
    rule_sentence,
)
from .validation import ValidationReport


@dataclass(frozen=True)
class AnalysisRequest:
    player: str
    analysis_type: str = "batting"
    opponents: Opponents = field(default_factory=Opponents.everyone)
    date_from: Date | None = None
    date_to: Date | None = None
    categories: tuple[str, ...] = CATEGORY_ORDER
    top_k: int = 3

    def __post_init__(self) -> None:
        if self.top_k < 1:
            raise InvalidFilter(f"top_k must be at least 1, got {self.top_k}")
        bad = [c for c in self.categories if c not in CATEGORY_ORDER]
        if bad or not self.categories:
            raise InvalidFilter(
                f"categories must be a non-empty subset of {CATEGORY_ORDER}, got {self.categories}"
            )

    def filter(self) -> FilterTuple:
        window = None
        if self.date_from is not None or self.date_to is not None:
            window = (self.date_from or Date.min, self.date_to or Date.max)
        return FilterTuple(
            player=self.player,
            opponents=self.opponents,
            time_window=window,
            analysis_type=self.analysis_type,
        )


def _rule_dict(rule, player: str, top_k: int) -> dict:
    return {
        "kind": rule.kind,
        "analysis_type": rule.analysis_type,
        "anchor": rule.anchor,
        "category": rule.category,
        "sentence": rule_sentence(rule, player, top_k),
        "ranked": [{"feature": f, "score": s} for f, s in rule.ranked],
    }


def run_analysis(
    corpus: Corpus,
    lexicon: FeatureLexicon,
    request: AnalysisRequest,
    roster: dict[str, str] | None = None,
) -> dict:
    """Full pipeline: filter, confrontation matrix, CA, rules, biplots."""
    flt = request.filter()
    selection = filter_deliveries(corpus, flt, roster=roster)
    cm = build_cm(selection.records, lexicon, flt, corpus.digest)
    ca = correspondence_analysis(cm)

    rules: dict[str, object] = {"strength": None, "weakness": None}
    for kind in ("strength", "weakness"):
        try:
            rules[kind] = _rule_dict(
                mine_rule(ca, request.analysis_type, kind), request.player, request.top_k
            )
        except AnchorUnobserved:
            pass
    rules["others"] = [
        _rule_dict(r, request.player, request.top_k)
        for r in mine_other_rules(ca, request.analysis_type)
    ]
    anchors = {STRENGTH_ANCHOR[request.analysis_type], WEAKNESS_ANCHOR[request.analysis_type]}
    rules["unobserved_anchors"] = [
        f for f in BATTING_FEATURES if f in anchors and f not in ca.row_labels
    ]

    biplots = {
        category: biplot_payload(biplot(ca, category)) for category in request.categories
    }

    provenance = {
        "player": request.player,
        "analysis_type": request.analysis_type,
        "opponents": flt.opponents.to_dict(),
        "date_from": request.date_from.isoformat() if request.date_from else None,
        "date_to": request.date_to.isoformat() if request.date_to else None,
        "top_k": request.top_k,
        "corpus_digest": corpus.digest,
        "cm_digest": cm.digest(),
        "records_selected": cm.records_total,
        "records_unmatched": cm.records_unmatched,
        "excluded_opponents": list(selection.excluded_opponents),
        "excluded_deliveries": selection.excluded_count,
        "n": cm.n,
        "row_labels": list(ca.row_labels),
        "col_labels": list(ca.col_labels),
        "dropped_rows": list(ca.dropped_rows),
        "dropped_cols": list(ca.dropped_cols),
        "singular_values": [float(v) for v in ca.singular_values],
        "rank": ca.rank,
        "rank_deficient": ca.rank_deficient,
        "inertia": ca.inertia,
        "chi_square": ca.inertia * cm.n,
    }
    return {"provenance": provenance, "rules": rules, "biplots": biplots}


def players_payload(corpus: Corpus) -> list[dict]:
    return [
        {
            "player": name,
            "batting_deliveries": len(corpus.player_index[name].batting),
            "bowling_deliveries": len(corpus.player_index[name].bowling),
        }
        for name in corpus.players()
    ]


def validation_payload(report: ValidationReport) -> dict:
    flt = report.filter
    return {
        "player": flt.player,
        "analysis_type": flt.analysis_type,
        "opponents": flt.opponents.to_dict(),
        "window_start": flt.time_window[0].isoformat() if flt.time_window else None,
        "window_end": flt.time_window[1].isoformat() if flt.time_window else None,
        "cutoff_date": report.cutoff_date.isoformat(),
        "train_count": report.train_count,
        "test_count": report.test_count,
        "procrustes_category": report.procrustes_category,
        "procrustes_delta": report.procrustes_delta,
        "commonality_pct": dict(report.commonality_pct),
        "top_k": report.top_k,
    }
