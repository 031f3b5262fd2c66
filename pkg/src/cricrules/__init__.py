"""Mine interpretable strength and weakness rules for cricket players from
ball-by-ball text commentary."""

from .analysis import AnalysisRequest, players_payload, run_analysis
from .ca import CAResult, chi_square, correspondence_analysis, pearson_ratios
from .confrontation import (
    ConfrontationMatrix,
    FilterTuple,
    Opponents,
    build_cm,
    filter_deliveries,
    load_roster,
)
from .corpus import (
    Corpus,
    DeliveryRecord,
    import_raw,
    load_corpus,
    parse_structured,
    save_corpus,
)
from .lexicon import (
    FeatureLexicon,
    default_lexicon,
    extract_ngrams,
    load_lexicon,
    map_features,
    normalize_tokens,
)
from .rules import (
    Rule,
    biplot,
    mine_all_rules,
    mine_other_rules,
    mine_rule,
    mine_rules,
    render_biplot_svg,
    rule_sentence,
)
from .validation import (
    ValidationReport,
    compare_biplots,
    holdout_split,
    procrustes_delta,
    rule_overlap,
    validate_player,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisRequest",
    "CAResult",
    "ConfrontationMatrix",
    "Corpus",
    "DeliveryRecord",
    "FeatureLexicon",
    "FilterTuple",
    "Opponents",
    "Rule",
    "ValidationReport",
    "biplot",
    "build_cm",
    "chi_square",
    "compare_biplots",
    "correspondence_analysis",
    "default_lexicon",
    "extract_ngrams",
    "filter_deliveries",
    "holdout_split",
    "import_raw",
    "load_corpus",
    "load_lexicon",
    "load_roster",
    "map_features",
    "mine_all_rules",
    "mine_other_rules",
    "mine_rule",
    "mine_rules",
    "normalize_tokens",
    "parse_structured",
    "pearson_ratios",
    "players_payload",
    "procrustes_delta",
    "render_biplot_svg",
    "rule_overlap",
    "rule_sentence",
    "run_analysis",
    "save_corpus",
    "validate_player",
]
