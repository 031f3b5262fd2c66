"""Delivery selection by filter tuple and confrontation-matrix construction.

A confrontation matrix counts co-occurrences of batting features (rows, always
the 19 canonical ones) and bowling features (columns). When the opponent
filter fixes the bowler class the four class-implied columns are dropped at
construction time.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import date as Date
from pathlib import Path

import numpy as np

from .corpus import Corpus, DeliveryRecord, unstructured_text
from .errors import (
    AllZeroMatrix,
    EmptySelection,
    FileUnreadable,
    InvalidFilter,
    RosterError,
    UnknownPlayer,
)
from .features import (
    ANALYSIS_TYPES,
    BATTING_FEATURES,
    BOWLER_CLASSES,
    BOWLING_FEATURES,
    CLASS_FILTERED_BOWLING_FEATURES,
)
from .lexicon import FeatureLexicon, extract_ngrams, map_features, normalize_tokens


@dataclass(frozen=True)
class Opponents:
    """Opponent restriction: everyone, a name list, or a bowler class."""

    mode: str
    players: frozenset[str] = frozenset()
    bowler_class: str | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("all", "players", "class"):
            raise InvalidFilter(f"unknown opponents mode {self.mode!r}")
        if self.mode == "players" and not self.players:
            raise InvalidFilter("opponents mode 'players' needs at least one name")
        if self.mode == "class" and self.bowler_class not in BOWLER_CLASSES:
            raise InvalidFilter(
                f"bowler class must be one of {BOWLER_CLASSES}, got {self.bowler_class!r}"
            )

    @classmethod
    def everyone(cls) -> "Opponents":
        return cls(mode="all")

    @classmethod
    def of_players(cls, names) -> "Opponents":
        return cls(mode="players", players=frozenset(names))

    @classmethod
    def of_class(cls, bowler_class: str) -> "Opponents":
        return cls(mode="class", bowler_class=bowler_class)

    @classmethod
    def parse(cls, text: str) -> "Opponents":
        """CLI/query form: "all", "fast", "spin", or comma-separated names."""
        t = text.strip()
        if not t:
            raise InvalidFilter("opponents value is empty")
        if t == "all":
            return cls.everyone()
        if t in BOWLER_CLASSES:
            return cls.of_class(t)
        names = [n.strip() for n in t.split(",")]
        if any(not n for n in names):
            raise InvalidFilter(f"empty name in opponents list {text!r}")
        return cls.of_players(names)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "players": sorted(self.players),
            "bowler_class": self.bowler_class,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Opponents":
        return cls(
            mode=data["mode"],
            players=frozenset(data.get("players") or ()),
            bowler_class=data.get("bowler_class"),
        )


@dataclass(frozen=True)
class FilterTuple:
    """What to analyse: player, opponents, time window, analysis type."""

    player: str
    opponents: Opponents = field(default_factory=Opponents.everyone)
    time_window: tuple[Date, Date] | None = None
    analysis_type: str = "batting"

    def __post_init__(self) -> None:
        if not self.player.strip():
            raise InvalidFilter("player must be non-empty")
        if self.analysis_type not in ANALYSIS_TYPES:
            raise InvalidFilter(
                f"analysis type must be one of {ANALYSIS_TYPES}, got {self.analysis_type!r}"
            )
        if self.time_window is not None:
            start, end = self.time_window
            if start > end:
                raise InvalidFilter(f"time window {start} .. {end} is reversed")

    def to_dict(self) -> dict:
        start, end = self.time_window if self.time_window else (None, None)
        return {
            "player": self.player,
            "analysis_type": self.analysis_type,
            "opponents": self.opponents.to_dict(),
            "window_start": start.isoformat() if start else None,
            "window_end": end.isoformat() if end else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FilterTuple":
        window = None
        if data.get("window_start") and data.get("window_end"):
            window = (
                Date.fromisoformat(data["window_start"]),
                Date.fromisoformat(data["window_end"]),
            )
        return cls(
            player=data["player"],
            opponents=Opponents.from_dict(data["opponents"]),
            time_window=window,
            analysis_type=data["analysis_type"],
        )


def load_roster(path: str | Path) -> dict[str, str]:
    """Load a bowler-class roster file: ``player<TAB>fast|spin`` per line."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    roster: dict[str, str] = {}
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise RosterError(f"{path}:{line_no}: expected 'player<TAB>class'")
        player, cls = parts[0].strip(), parts[1].strip()
        if not player or cls not in BOWLER_CLASSES:
            raise RosterError(
                f"{path}:{line_no}: class must be one of {BOWLER_CLASSES}, got {cls!r}"
            )
        if player in roster and roster[player] != cls:
            raise RosterError(f"{path}:{line_no}: conflicting classes for {player!r}")
        roster[player] = cls
    return roster


@dataclass(frozen=True)
class Selection:
    """Deliveries matching a filter tuple, in corpus order."""

    records: tuple[DeliveryRecord, ...]
    excluded_opponents: tuple[str, ...]
    excluded_count: int


def filter_deliveries(
    corpus: Corpus,
    flt: FilterTuple,
    roster: dict[str, str] | None = None,
) -> Selection:
    """Select the player's deliveries in the given role, window and opposition.

    Class-mode opponent filters need a roster; opponents missing from it are
    excluded and reported rather than silently classed.
    """
    positions = corpus.player_index.get(flt.player)
    if positions is None:
        raise UnknownPlayer(f"player {flt.player!r} does not appear in the corpus")
    batting = flt.analysis_type == "batting"
    candidate = positions.batting if batting else positions.bowling
    records = [corpus.records[i] for i in candidate]
    if flt.time_window is not None:
        start, end = flt.time_window
        records = [r for r in records if start <= r.date <= end]

    excluded_names: set[str] = set()
    excluded_count = 0
    opp = flt.opponents
    if opp.mode == "players":
        records = [
            r for r in records if (r.bowler if batting else r.batsman) in opp.players
        ]
    elif opp.mode == "class":
        if roster is None:
            raise RosterError("opponent filter by bowler class needs a roster")
        kept = []
        for r in records:
            name = r.bowler if batting else r.batsman
            cls = roster.get(name)
            if cls is None:
                excluded_names.add(name)
                excluded_count += 1
            elif cls == opp.bowler_class:
                kept.append(r)
        records = kept

    if not records:
        raise EmptySelection(f"no deliveries match filter {flt.to_dict()}")
    return Selection(
        records=tuple(records),
        excluded_opponents=tuple(sorted(excluded_names)),
        excluded_count=excluded_count,
    )


@dataclass(frozen=True)
class ConfrontationMatrix:
    """Batting-by-bowling co-occurrence counts for one filter tuple."""

    counts: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    filter: FilterTuple
    corpus_digest: str
    records_total: int
    records_unmatched: int

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    def digest(self) -> str:
        return hashlib.sha256(export_cm(self).encode("utf-8")).hexdigest()


def build_cm(
    records,
    lexicon: FeatureLexicon,
    flt: FilterTuple,
    corpus_digest: str = "",
) -> ConfrontationMatrix:
    """Accumulate a confrontation matrix over the given deliveries.

    Every delivery contributes the full cartesian product of its batting and
    bowling feature sets; a delivery whose bowling side is empty contributes
    nothing and is counted as unmatched.
    """
    records = tuple(records)
    if not records:
        raise EmptySelection("cannot build a confrontation matrix from zero deliveries")
    col_labels = (
        CLASS_FILTERED_BOWLING_FEATURES
        if flt.opponents.mode == "class"
        else BOWLING_FEATURES
    )
    row_index = {f: i for i, f in enumerate(BATTING_FEATURES)}
    col_index = {f: j for j, f in enumerate(col_labels)}
    counts = np.zeros((len(BATTING_FEATURES), len(col_labels)), dtype=np.int64)
    unmatched = 0
    for record in records:
        grams = extract_ngrams(normalize_tokens(unstructured_text(record)))
        bat, bowl = map_features(grams, record.outcome, lexicon)
        cols = [col_index[f] for f in bowl if f in col_index]
        if not cols:
            unmatched += 1
            continue
        for a in bat:
            i = row_index[a]
            for j in cols:
                counts[i, j] += 1
    if counts.sum() == 0:
        raise AllZeroMatrix(
            f"none of the {len(records)} selected deliveries produced a feature pair"
        )
    return ConfrontationMatrix(
        counts=counts,
        row_labels=BATTING_FEATURES,
        col_labels=col_labels,
        filter=flt,
        corpus_digest=corpus_digest,
        records_total=len(records),
        records_unmatched=unmatched,
    )


def export_cm(cm: ConfrontationMatrix) -> str:
    """Render a confrontation matrix as tab-separated text with provenance comments."""
    lines = [
        "# confrontation matrix",
        "# filter: " + json.dumps(cm.filter.to_dict(), sort_keys=True),
        f"# corpus_digest: {cm.corpus_digest}",
        f"# records_total: {cm.records_total}",
        f"# records_unmatched: {cm.records_unmatched}",
        "\t".join(("feature",) + cm.col_labels),
    ]
    for i, row_label in enumerate(cm.row_labels):
        lines.append("\t".join([row_label] + [str(int(v)) for v in cm.counts[i]]))
    return "\n".join(lines) + "\n"


def parse_cm(text: str) -> ConfrontationMatrix:
    """Inverse of export_cm."""
    meta: dict[str, str] = {}
    header: tuple[str, ...] | None = None
    rows: list[tuple[str, list[int]]] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                meta[key.strip()] = value.strip()
            continue
        parts = line.split("\t")
        if header is None:
            if parts[0] != "feature":
                raise ValueError("first table line must start with 'feature'")
            header = tuple(parts[1:])
            continue
        rows.append((parts[0], [int(v) for v in parts[1:]]))
    if header is None or not rows:
        raise ValueError("confrontation matrix text has no table")
    if "filter" not in meta:
        raise ValueError("confrontation matrix text has no filter comment")
    row_labels = tuple(label for label, _ in rows)
    counts = np.array([values for _, values in rows], dtype=np.int64)
    if counts.shape[1] != len(header):
        raise ValueError("row width does not match header width")
    flt = FilterTuple.from_dict(json.loads(meta["filter"]))
    return ConfrontationMatrix(
        counts=counts,
        row_labels=row_labels,
        col_labels=header,
        filter=flt,
        corpus_digest=meta.get("corpus_digest", ""),
        records_total=int(meta.get("records_total", "0")),
        records_unmatched=int(meta.get("records_unmatched", "0")),
    )


def save_cm(cm: ConfrontationMatrix, path: str | Path) -> None:
    Path(path).write_text(export_cm(cm), encoding="utf-8")


def load_cm(path: str | Path) -> ConfrontationMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    return parse_cm(text)
