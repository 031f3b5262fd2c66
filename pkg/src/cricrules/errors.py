"""Error taxonomy shared by the library, the CLI and the HTTP service.

Every error carries a stable machine-readable ``code`` and a fixed process
``exit_code`` so that scripted callers can branch without parsing messages.
"""

from __future__ import annotations


class CricRulesError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"
    exit_code = 1


class FileUnreadable(CricRulesError):
    """A required input file is missing or cannot be read."""

    code = "FILE_UNREADABLE"
    exit_code = 3


class EmptyCorpus(CricRulesError):
    """A corpus file yielded zero valid delivery records."""

    code = "EMPTY_CORPUS"
    exit_code = 4


class EmptySelection(CricRulesError):
    """A filter tuple selected zero deliveries."""

    code = "EMPTY_SELECTION"
    exit_code = 5


class AllZeroMatrix(CricRulesError):
    """No delivery in the selection produced a feature pair."""

    code = "ALL_ZERO_MATRIX"
    exit_code = 6


class RankZero(CricRulesError):
    """The centred table has no signal left to decompose."""

    code = "RANK_ZERO"
    exit_code = 7


class DegenerateMatrix(CricRulesError):
    """The table cannot be analysed at all (for example a zero total)."""

    code = "DEGENERATE_MATRIX"
    exit_code = 8


class AnchorUnobserved(CricRulesError):
    """The anchor batting feature has no observations in the table."""

    code = "ANCHOR_UNOBSERVED"
    exit_code = 9


class EmptySide(CricRulesError):
    """A holdout split left the train or the test side empty."""

    code = "EMPTY_SIDE"
    exit_code = 10


class LabelMismatch(CricRulesError):
    """Two point configurations do not share a common label set."""

    code = "LABEL_MISMATCH"
    exit_code = 11


class DegenerateConfiguration(CricRulesError):
    """A point configuration has no spread to align against."""

    code = "DEGENERATE_CONFIGURATION"
    exit_code = 12


class LexiconError(CricRulesError):
    """A lexicon file is structurally invalid."""

    code = "LEXICON_ERROR"
    exit_code = 13


class RosterError(CricRulesError):
    """A bowler-class roster is missing, unreadable or invalid."""

    code = "ROSTER_ERROR"
    exit_code = 14


class MalformedHeader(CricRulesError):
    """A commentary line does not start with a parsable structured header."""

    code = "MALFORMED_HEADER"
    exit_code = 15


class InvalidFilter(CricRulesError):
    """A filter parameter is syntactically or semantically invalid."""

    code = "INVALID_FILTER"
    exit_code = 2


class UnknownPlayer(CricRulesError):
    """The requested player does not appear in the corpus."""

    code = "UNKNOWN_PLAYER"
    exit_code = 17


EXIT_CODES: dict[str, int] = {
    cls.code: cls.exit_code
    for cls in (
        CricRulesError,
        InvalidFilter,
        FileUnreadable,
        EmptyCorpus,
        EmptySelection,
        AllZeroMatrix,
        RankZero,
        DegenerateMatrix,
        AnchorUnobserved,
        EmptySide,
        LabelMismatch,
        DegenerateConfiguration,
        LexiconError,
        RosterError,
        MalformedHeader,
        UnknownPlayer,
    )
}
