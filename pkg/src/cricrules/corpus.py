"""Ball-by-ball commentary corpus: record model, header parsing, flat storage.

Corpus files are UTF-8, one record per line, with tab-separated fields in the
order: match_id, date, innings, day, session, over, ball_in_over, bowler,
batsman, outcome, dismissal_kind, speed_kph, short_text, text. Absent optional
fields serialize as the empty string. Tabs and newlines never appear inside a
field because record construction collapses them to single spaces.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from datetime import date as Date
from pathlib import Path

from .errors import EmptyCorpus, FileUnreadable, MalformedHeader
from .features import OUTCOMES

FIELD_NAMES: tuple[str, ...] = (
    "match_id",
    "date",
    "innings",
    "day",
    "session",
    "over",
    "ball_in_over",
    "bowler",
    "batsman",
    "outcome",
    "dismissal_kind",
    "speed_kph",
    "short_text",
    "text",
)

_FIELD_BREAKS = re.compile(r"[\t\r\n]+")

# Structured header: "<over>.<ball>, <bowler> to <batsman>, <outcome>,
# [<speed> kph,] <remainder>". The outcome token never contains a comma.
_HEADER_RE = re.compile(
    r"^\s*(\d+)\.(\d+)\s*,\s*(.+?)\s+to\s+(.+?)\s*,\s*([^,]+?)\s*,\s*"
    r"(?:(\d+(?:\.\d+)?)\s*kph\s*,\s*)?(.*)$",
    re.DOTALL,
)

_RUNS_RE = re.compile(r"^(\d)\s*runs?$")

_OUTCOME_WORDS = {
    "no run": "0",
    "no runs": "0",
    "out": "out",
    "four": "4",
    "six": "6",
}


def normalize_outcome_token(token: str) -> str:
    """Map a header outcome token ("1 run", "FOUR", "OUT", ...) to canonical form."""
    t = token.strip().lower()
    if t in _OUTCOME_WORDS:
        return _OUTCOME_WORDS[t]
    m = _RUNS_RE.match(t)
    if m and int(m.group(1)) <= 6:
        return m.group(1)
    raise MalformedHeader(f"unrecognized outcome token {token!r}")


@dataclass(frozen=True)
class ParsedHeader:
    """Structured fields recovered from the front of one commentary line."""

    over: int
    ball_in_over: int
    bowler: str
    batsman: str
    outcome: str
    speed_kph: float | None
    remainder: str


def parse_structured(line: str) -> ParsedHeader:
    """Split one commentary line into its structured header and free-text remainder.

    Raises MalformedHeader when the line does not start with
    "<over>.<ball>, <bowler> to <batsman>, <outcome>,".
    """
    m = _HEADER_RE.match(line)
    if m is None:
        raise MalformedHeader(
            "line does not start with '<over>.<ball>, <bowler> to <batsman>, <outcome>,'"
        )
    over = int(m.group(1))
    ball = int(m.group(2))
    if ball < 1:
        raise MalformedHeader(f"ball number must be at least 1, got {ball}")
    outcome = normalize_outcome_token(m.group(5))
    speed = float(m.group(6)) if m.group(6) is not None else None
    return ParsedHeader(
        over=over,
        ball_in_over=ball,
        bowler=m.group(3).strip(),
        batsman=m.group(4).strip(),
        outcome=outcome,
        speed_kph=speed,
        remainder=m.group(7).strip(),
    )


def _clean(text: str) -> str:
    return _FIELD_BREAKS.sub(" ", text).strip()


@dataclass(frozen=True)
class DeliveryRecord:
    """One delivery with its structured fields and full commentary text."""

    match_id: str
    date: Date
    innings: int
    over: int
    ball_in_over: int
    bowler: str
    batsman: str
    outcome: str
    text: str
    day: int | None = None
    session: int | None = None
    dismissal_kind: str | None = None
    speed_kph: float | None = None
    short_text: str | None = None

    def __post_init__(self) -> None:
        for name in ("match_id", "bowler", "batsman", "text", "dismissal_kind", "short_text"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, _clean(value))
        if not self.match_id:
            raise ValueError("match_id must be non-empty")
        if not isinstance(self.date, Date):
            raise ValueError("date must be a datetime.date")
        if self.innings < 1:
            raise ValueError(f"innings must be at least 1, got {self.innings}")
        if self.over < 0:
            raise ValueError(f"over must be non-negative, got {self.over}")
        if self.ball_in_over < 1:
            raise ValueError(f"ball_in_over must be at least 1, got {self.ball_in_over}")
        if not self.bowler or not self.batsman:
            raise ValueError("bowler and batsman must be non-empty")
        if self.bowler == self.batsman:
            raise ValueError(f"bowler and batsman are both {self.bowler!r}")
        if self.outcome not in OUTCOMES:
            raise ValueError(f"outcome must be one of {OUTCOMES}, got {self.outcome!r}")
        if not self.text:
            raise ValueError("text must be non-empty")
        for name in ("day", "session"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be at least 1, got {value}")
        if self.speed_kph is not None and self.speed_kph < 0:
            raise ValueError(f"speed_kph must be non-negative, got {self.speed_kph}")


def unstructured_text(record: DeliveryRecord) -> str:
    """Free-text portion of a record's commentary.

    Records ingested from raw commentary keep the structured header inside
    ``text``; records built from pre-split sources may not. Strip the header
    when one parses, otherwise treat the whole text as unstructured.
    """
    try:
        return parse_structured(record.text).remainder
    except MalformedHeader:
        return record.text


def _opt_str(value: str | None) -> str:
    return "" if value is None else value


def _opt_int(value: int | None) -> str:
    return "" if value is None else str(value)


def _opt_float(value: float | None) -> str:
    # repr is the shortest exact representation; integral values drop the ".0".
    if value is None:
        return ""
    s = repr(float(value))
    return s[:-2] if s.endswith(".0") else s


def record_to_line(record: DeliveryRecord) -> str:
    return "\t".join(
        (
            record.match_id,
            record.date.isoformat(),
            str(record.innings),
            _opt_int(record.day),
            _opt_int(record.session),
            str(record.over),
            str(record.ball_in_over),
            record.bowler,
            record.batsman,
            record.outcome,
            _opt_str(record.dismissal_kind),
            _opt_float(record.speed_kph),
            _opt_str(record.short_text),
            record.text,
        )
    )


def record_from_line(line: str) -> DeliveryRecord:
    parts = line.split("\t")
    if len(parts) != len(FIELD_NAMES):
        raise ValueError(f"expected {len(FIELD_NAMES)} tab-separated fields, got {len(parts)}")
    (
        match_id,
        date_s,
        innings_s,
        day_s,
        session_s,
        over_s,
        ball_s,
        bowler,
        batsman,
        outcome,
        dismissal,
        speed_s,
        short_text,
        text,
    ) = parts
    return DeliveryRecord(
        match_id=match_id,
        date=Date.fromisoformat(date_s),
        innings=int(innings_s),
        day=int(day_s) if day_s else None,
        session=int(session_s) if session_s else None,
        over=int(over_s),
        ball_in_over=int(ball_s),
        bowler=bowler,
        batsman=batsman,
        outcome=outcome,
        dismissal_kind=dismissal or None,
        speed_kph=float(speed_s) if speed_s else None,
        short_text=short_text or None,
        text=text,
    )


@dataclass(frozen=True)
class PlayerPositions:
    """Record positions where a player batted and bowled."""

    batting: tuple[int, ...] = ()
    bowling: tuple[int, ...] = ()


@dataclass(frozen=True)
class LoadReport:
    """Summary of one ingestion run."""

    accepted: int
    rejected: tuple[tuple[int, str], ...]

    @property
    def total(self) -> int:
        return self.accepted + len(self.rejected)


@dataclass(frozen=True)
class Corpus:
    records: tuple[DeliveryRecord, ...]
    player_index: dict[str, PlayerPositions]
    date_range: tuple[Date, Date]
    digest: str

    @classmethod
    def from_records(cls, records) -> "Corpus":
        records = tuple(records)
        if not records:
            raise EmptyCorpus("corpus has no valid delivery records")
        batting: dict[str, list[int]] = {}
        bowling: dict[str, list[int]] = {}
        for pos, record in enumerate(records):
            batting.setdefault(record.batsman, []).append(pos)
            bowling.setdefault(record.bowler, []).append(pos)
        index = {
            player: PlayerPositions(
                batting=tuple(batting.get(player, ())),
                bowling=tuple(bowling.get(player, ())),
            )
            for player in set(batting) | set(bowling)
        }
        dates = [r.date for r in records]
        digest = hashlib.sha256(
            "\n".join(record_to_line(r) for r in records).encode("utf-8")
        ).hexdigest()
        return cls(
            records=records,
            player_index=index,
            date_range=(min(dates), max(dates)),
            digest=digest,
        )

    def players(self) -> list[str]:
        return sorted(self.player_index)


def _read_lines(path: str | Path) -> list[str]:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    return raw.splitlines()


def load_corpus(path: str | Path) -> tuple[Corpus, LoadReport]:
    """Load a corpus file, collecting per-line rejection reasons."""
    records: list[DeliveryRecord] = []
    rejected: list[tuple[int, str]] = []
    for line_no, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        try:
            records.append(record_from_line(line))
        except (ValueError, MalformedHeader) as exc:
            rejected.append((line_no, str(exc)))
    report = LoadReport(accepted=len(records), rejected=tuple(rejected))
    if not records:
        raise EmptyCorpus(
            f"{path} yielded no valid records ({len(rejected)} rejected lines)"
        )
    return Corpus.from_records(records), report


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    text = "".join(record_to_line(r) + "\n" for r in corpus.records)
    Path(path).write_text(text, encoding="utf-8")


def import_raw(
    path: str | Path,
    *,
    date: Date,
    match_id: str | None = None,
    innings: int = 1,
) -> tuple[Corpus, LoadReport]:
    """Build a corpus from raw commentary, one line per delivery.

    Raw lines carry no match identifier, date or innings, so those must be
    supplied; ``match_id`` defaults to the file stem. The full line is kept as
    the record text.
    """
    if match_id is None:
        match_id = Path(path).stem
    records: list[DeliveryRecord] = []
    rejected: list[tuple[int, str]] = []
    for line_no, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        try:
            header = parse_structured(line)
            records.append(
                DeliveryRecord(
                    match_id=match_id,
                    date=date,
                    innings=innings,
                    over=header.over,
                    ball_in_over=header.ball_in_over,
                    bowler=header.bowler,
                    batsman=header.batsman,
                    outcome=header.outcome,
                    speed_kph=header.speed_kph,
                    text=line,
                )
            )
        except (ValueError, MalformedHeader) as exc:
            rejected.append((line_no, str(exc)))
    report = LoadReport(accepted=len(records), rejected=tuple(rejected))
    if not records:
        raise EmptyCorpus(
            f"{path} yielded no valid records ({len(rejected)} rejected lines)"
        )
    return Corpus.from_records(records), report
