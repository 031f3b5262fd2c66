"""Canonical feature vocabulary for batting and bowling.

The orders below are load-bearing: confrontation matrices, rule tie-breaking
and every exported label sequence follow them.
"""

from __future__ import annotations

BATTING_FEATURES: tuple[str, ...] = (
    "0 run",
    "1 run",
    "2 run",
    "3 run",
    "4 run",
    "5 run",
    "6 run",
    "out",
    "beaten",
    "defended",
    "attacked",
    "front foot",
    "back foot",
    "third man",
    "square off",
    "long off",
    "long on",
    "square leg",
    "fine leg",
)

BOWLING_FEATURES: tuple[str, ...] = (
    "good",
    "short",
    "full",
    "off",
    "leg",
    "middle",
    "spin",
    "swing",
    "fast",
    "slow",
    "move-in",
    "move-out",
)

# Bowling features that are fixed by construction once the opponent filter
# restricts deliveries to a single bowler class; kept out of class-filtered
# confrontation matrices.
CLASS_IMPLIED_BOWLING: frozenset[str] = frozenset({"fast", "slow", "spin", "swing"})

CLASS_FILTERED_BOWLING_FEATURES: tuple[str, ...] = tuple(
    f for f in BOWLING_FEATURES if f not in CLASS_IMPLIED_BOWLING
)

OUTCOMES: tuple[str, ...] = ("0", "1", "2", "3", "4", "5", "6", "out")

OUTCOME_BATTING_FEATURE: dict[str, str] = {
    "0": "0 run",
    "1": "1 run",
    "2": "2 run",
    "3": "3 run",
    "4": "4 run",
    "5": "5 run",
    "6": "6 run",
    "out": "out",
}

# Batting features partition into four disjoint categories; members are listed
# in canonical batting order.
BATTING_CATEGORIES: dict[str, tuple[str, ...]] = {
    "outcome": BATTING_FEATURES[0:8],
    "response": BATTING_FEATURES[8:11],
    "footwork": BATTING_FEATURES[11:13],
    "shot-area": BATTING_FEATURES[13:19],
}

CATEGORY_ORDER: tuple[str, ...] = ("response", "outcome", "footwork", "shot-area")

FEATURE_CATEGORY: dict[str, str] = {
    feature: category
    for category, members in BATTING_CATEGORIES.items()
    for feature in members
}

ANALYSIS_TYPES: tuple[str, ...] = ("batting", "bowling")

BOWLER_CLASSES: tuple[str, ...] = ("fast", "spin")


def batting_index(feature: str) -> int:
    """Position of a batting feature in canonical order."""
    return BATTING_FEATURES.index(feature)


def bowling_index(feature: str) -> int:
    """Position of a bowling feature in canonical order."""
    return BOWLING_FEATURES.index(feature)
