"""Stability validation: holdout splits, Procrustes distance, rule overlap.

The intrinsic check splits a player's deliveries at a cutoff date (default:
one year before the last selected delivery), mines rules and biplots on each
side and reports (a) the normalized Procrustes distance between the two
biplot configurations and (b) the commonality percentage between the mined
rule sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date as Date
from pathlib import Path

import numpy as np

from .ca import correspondence_analysis
from .confrontation import FilterTuple, build_cm, filter_deliveries
from .corpus import Corpus
from .errors import (
    DegenerateConfiguration,
    EmptySide,
    FileUnreadable,
    LabelMismatch,
)
from .features import BATTING_FEATURES, BOWLING_FEATURES, CATEGORY_ORDER
from .lexicon import FeatureLexicon
from .rules import BiplotData, biplot, mine_all_rules


def one_year_before(day: Date) -> Date:
    try:
        return day.replace(year=day.year - 1)
    except ValueError:
        # February 29 with no counterpart in the previous year.
        return day.replace(year=day.year - 1, day=28)


def holdout_split(
    corpus: Corpus,
    flt: FilterTuple,
    cutoff_date: Date | None = None,
    roster: dict[str, str] | None = None,
):
    """Split the filtered selection into train (before cutoff) and test (from cutoff).

    Returns (train_records, test_records, cutoff_date).
    """
    selection = filter_deliveries(corpus, flt, roster=roster)
    if cutoff_date is None:
        cutoff_date = one_year_before(max(r.date for r in selection.records))
    train = tuple(r for r in selection.records if r.date < cutoff_date)
    test = tuple(r for r in selection.records if r.date >= cutoff_date)
    if not train or not test:
        raise EmptySide(
            f"cutoff {cutoff_date.isoformat()} leaves {len(train)} train and "
            f"{len(test)} test deliveries"
        )
    return train, test, cutoff_date


def procrustes_delta(a, b) -> float:
    """Normalized squared Procrustes distance between two point configurations.

    The best translation, uniform scale, rotation and reflection of ``b`` is
    fitted to ``a``; the residual is divided by the total variance of ``a``,
    giving a value in [0, 1]. Identical configurations return exactly 0.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape != b.shape:
        raise LabelMismatch(f"configurations have shapes {a.shape} and {b.shape}")
    if a.shape[0] < 2:
        raise DegenerateConfiguration("need at least two points to align")
    if np.array_equal(a, b):
        return 0.0
    X = a - a.mean(axis=0)
    Y = b - b.mean(axis=0)
    ss_x = float(np.sum(X * X))
    ss_y = float(np.sum(Y * Y))
    if ss_x <= 0.0:
        raise DegenerateConfiguration("reference configuration has coincident points")
    if ss_y <= 0.0:
        return 1.0
    trace = float(np.sum(np.linalg.svd(Y.T @ X, compute_uv=False)))
    return max(0.0, 1.0 - (trace * trace) / (ss_x * ss_y))


def compare_biplots(reference: BiplotData, other: BiplotData) -> float:
    """Procrustes distance between two biplots over their shared labels.

    Points are matched by (side, label); both biplots must describe the same
    category and share at least two labelled points.
    """
    if reference.category != other.category:
        raise LabelMismatch(
            f"biplots describe categories {reference.category!r} and {other.category!r}"
        )
    ref_points = {(p.side, p.label): p for p in reference.points}
    other_points = {(p.side, p.label): p for p in other.points}
    shared = [k for k in ref_points if k in other_points]
    if len(shared) < 2:
        raise LabelMismatch(
            f"biplots share only {len(shared)} labelled points; need at least 2"
        )
    shared.sort(key=lambda k: (k[0], k[1]))
    a = np.array([[ref_points[k].x, ref_points[k].y] for k in shared])
    b = np.array([[other_points[k].x, other_points[k].y] for k in shared])
    return procrustes_delta(a, b)


def _rule_pairs(rules, k: int) -> set[tuple[str, str]]:
    return {
        (rule.anchor, feature)
        for rule in rules
        for feature in rule.top(k)
    }


def rule_overlap(train_rules, test_rules, k: int = 3) -> float:
    """Commonality percentage of top-k (anchor, bowling feature) pairs.

    The denominator is the test side's pair set; an empty test side yields 0.
    """
    train_pairs = _rule_pairs(train_rules, k)
    test_pairs = _rule_pairs(test_rules, k)
    if not test_pairs:
        return 0.0
    return 100.0 * len(train_pairs & test_pairs) / len(test_pairs)


def read_rule_file(path: str | Path) -> set[tuple[str, str]]:
    """Load human-authored rules: ``anchor<TAB>bowling-feature`` per line."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    pairs: set[tuple[str, str]] = set()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{line_no}: expected 'anchor<TAB>bowling-feature'")
        anchor, feature = parts[0].strip(), parts[1].strip()
        if anchor not in BATTING_FEATURES:
            raise ValueError(f"{path}:{line_no}: unknown anchor feature {anchor!r}")
        if feature not in BOWLING_FEATURES:
            raise ValueError(f"{path}:{line_no}: unknown bowling feature {feature!r}")
        pairs.add((anchor, feature))
    return pairs


def overlap_with_pairs(rules, pairs: set[tuple[str, str]], k: int = 3) -> float:
    """Commonality percentage of mined rules against a reference pair set."""
    if not pairs:
        return 0.0
    mined = _rule_pairs(rules, k)
    return 100.0 * len(mined & pairs) / len(pairs)


@dataclass(frozen=True)
class ValidationReport:
    filter: FilterTuple
    cutoff_date: Date
    train_count: int
    test_count: int
    procrustes_category: str
    procrustes_delta: float
    commonality_pct: dict[str, float]
    top_k: int


def validate_player(
    corpus: Corpus,
    lexicon: FeatureLexicon,
    flt: FilterTuple,
    cutoff_date: Date | None = None,
    roster: dict[str, str] | None = None,
    top_k: int = 3,
    procrustes_category: str = "response",
) -> ValidationReport:
    """Intrinsic stability check of a player's mined rules across a holdout split."""
    if procrustes_category not in CATEGORY_ORDER:
        raise ValueError(
            f"category must be one of {CATEGORY_ORDER}, got {procrustes_category!r}"
        )
    train, test, cutoff = holdout_split(corpus, flt, cutoff_date, roster=roster)
    sides = {}
    for name, records in (("train", train), ("test", test)):
        ca = correspondence_analysis(build_cm(records, lexicon, flt, corpus.digest))
        strength, weakness, others = mine_all_rules(ca, flt.analysis_type)
        sides[name] = {
            "biplot": biplot(ca, procrustes_category),
            "strength": [strength] if strength else [],
            "weakness": [weakness] if weakness else [],
            "other": others,
        }
    delta = compare_biplots(sides["train"]["biplot"], sides["test"]["biplot"])
    commonality = {}
    for kind in ("strength", "weakness", "other"):
        commonality[kind] = rule_overlap(
            sides["train"][kind], sides["test"][kind], k=top_k
        )
    commonality["overall"] = rule_overlap(
        sides["train"]["strength"] + sides["train"]["weakness"] + sides["train"]["other"],
        sides["test"]["strength"] + sides["test"]["weakness"] + sides["test"]["other"],
        k=top_k,
    )
    return ValidationReport(
        filter=flt,
        cutoff_date=cutoff,
        train_count=len(train),
        test_count=len(test),
        procrustes_category=procrustes_category,
        procrustes_delta=delta,
        commonality_pct=commonality,
        top_k=top_k,
    )
