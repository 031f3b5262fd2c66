"""Feature lexicon: token normalization, n-gram extraction, feature mapping.

Lexicon files are UTF-8 with one entry per line: ``side<TAB>feature<TAB>ngram``
where side is ``bat`` or ``bowl``. Blank lines and lines starting with ``#``
are ignored. Entries must already be in normalized form (lowercase, one or two
tokens, single spaces) so that set intersection against extracted n-grams is
exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import FileUnreadable, LexiconError
from .features import BATTING_FEATURES, BOWLING_FEATURES, OUTCOME_BATTING_FEATURE, OUTCOMES

# Hyphens between word characters are part of the token ("move-in"); every
# other non-alphanumeric character separates tokens.
_INTRA_HYPHEN = re.compile(r"(?<=[a-z0-9])-(?=[a-z0-9])")
_NON_TOKEN = re.compile(r"[^a-z0-9\x00 ]")

_SIDES = ("bat", "bowl")


def normalize_tokens(text: str) -> list[str]:
    """Lowercase, strip punctuation except intra-word hyphens, split on whitespace."""
    # NUL doubles as the hyphen-protection sentinel below; real ones must go.
    s = text.lower().replace("\x00", " ")
    s = _INTRA_HYPHEN.sub("\x00", s)
    s = _NON_TOKEN.sub(" ", s)
    s = s.replace("\x00", "-")
    return s.split()


def extract_ngrams(tokens: list[str]) -> set[str]:
    """Unigrams and bigrams (space-joined) of a token list."""
    grams = set(tokens)
    grams.update(f"{a} {b}" for a, b in zip(tokens, tokens[1:]))
    return grams


def _check_entry(side: str, feature: str, ngram: str) -> str | None:
    """Return a problem description for a lexicon entry, or None if it is fine."""
    if side not in _SIDES:
        return f"unknown side {side!r} (expected 'bat' or 'bowl')"
    known = BATTING_FEATURES if side == "bat" else BOWLING_FEATURES
    if feature not in known:
        return f"unknown {side} feature {feature!r}"
    tokens = normalize_tokens(ngram)
    if not 1 <= len(tokens) <= 2:
        return f"ngram {ngram!r} must be one or two tokens"
    if " ".join(tokens) != ngram:
        return f"ngram {ngram!r} is not in normalized form (expected {' '.join(tokens)!r})"
    return None


@dataclass(frozen=True)
class FeatureLexicon:
    """Feature-defining n-gram sets, one per batting and bowling feature."""

    batting: dict[str, frozenset[str]]
    bowling: dict[str, frozenset[str]]

    @classmethod
    def from_entries(cls, entries) -> "FeatureLexicon":
        batting: dict[str, set[str]] = {f: set() for f in BATTING_FEATURES}
        bowling: dict[str, set[str]] = {f: set() for f in BOWLING_FEATURES}
        for side, feature, ngram in entries:
            problem = _check_entry(side, feature, ngram)
            if problem is not None:
                raise LexiconError(problem)
            (batting if side == "bat" else bowling)[feature].add(ngram)
        return cls(
            batting={f: frozenset(s) for f, s in batting.items()},
            bowling={f: frozenset(s) for f, s in bowling.items()},
        )

    def entries(self) -> list[tuple[str, str, str]]:
        out = [
            ("bat", feature, ngram)
            for feature in BATTING_FEATURES
            for ngram in sorted(self.batting[feature])
        ]
        out.extend(
            ("bowl", feature, ngram)
            for feature in BOWLING_FEATURES
            for ngram in sorted(self.bowling[feature])
        )
        return out


@dataclass(frozen=True)
class LintFinding:
    line_no: int
    problem: str


def _parse_lines(lines) -> tuple[list[tuple[int, str, str, str]], list[LintFinding]]:
    parsed: list[tuple[int, str, str, str]] = []
    findings: list[LintFinding] = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            findings.append(
                LintFinding(line_no, f"expected 3 tab-separated fields, got {len(parts)}")
            )
            continue
        parsed.append((line_no, parts[0].strip(), parts[1].strip(), parts[2].strip()))
    return parsed, findings


def load_lexicon(path: str | Path) -> FeatureLexicon:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    parsed, findings = _parse_lines(lines)
    if findings:
        first = findings[0]
        raise LexiconError(f"{path}:{first.line_no}: {first.problem}")
    try:
        return FeatureLexicon.from_entries((s, f, n) for _, s, f, n in parsed)
    except LexiconError as exc:
        raise LexiconError(f"{path}: {exc}") from exc


def lint_lexicon(path: str | Path) -> list[LintFinding]:
    """Check a lexicon file without loading it; returns all findings."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    parsed, findings = _parse_lines(lines)
    seen: set[tuple[str, str, str]] = set()
    for line_no, side, feature, ngram in parsed:
        problem = _check_entry(side, feature, ngram)
        if problem is not None:
            findings.append(LintFinding(line_no, problem))
            continue
        entry = (side, feature, ngram)
        if entry in seen:
            findings.append(LintFinding(line_no, f"duplicate entry {side} {feature} {ngram!r}"))
        seen.add(entry)
    findings.sort(key=lambda f: f.line_no)
    return findings


def default_lexicon() -> FeatureLexicon:
    """The starter lexicon shipped with the package."""
    with resources.as_file(resources.files("cricrules").joinpath("data/lexicon.tsv")) as p:
        return load_lexicon(p)


def map_features(ngrams: set[str], outcome: str, lexicon: FeatureLexicon):
    """Feature sets of one delivery: lexicon hits plus the outcome feature.

    The outcome always contributes one batting feature, so the batting side is
    never empty; the bowling side may be.
    """
    if outcome not in OUTCOMES:
        raise ValueError(f"outcome must be one of {OUTCOMES}, got {outcome!r}")
    bat = {OUTCOME_BATTING_FEATURE[outcome]}
    bat.update(f for f, grams in lexicon.batting.items() if grams & ngrams)
    bowl = {f for f, grams in lexicon.bowling.items() if grams & ngrams}
    return frozenset(bat), frozenset(bowl)
