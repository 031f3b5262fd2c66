"""Rule mining and biplot construction on top of a correspondence analysis.

A rule ranks bowling features by their inner product with an anchor batting
feature in the first two principal dimensions. The strength anchor of a
batting analysis is "attacked" (deliveries the player attacks) and the
weakness anchor is "beaten"; for a bowling analysis the roles swap, because
the batting features describe the opposing batsmen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ca import CAResult
from .errors import AnchorUnobserved
from .features import BATTING_CATEGORIES, BATTING_FEATURES, FEATURE_CATEGORY

STRENGTH_ANCHOR = {"batting": "attacked", "bowling": "beaten"}
WEAKNESS_ANCHOR = {"batting": "beaten", "bowling": "attacked"}


@dataclass(frozen=True)
class Rule:
    """Ranked bowling features for one anchor batting feature."""

    kind: str
    analysis_type: str
    anchor: str
    category: str
    ranked: tuple[tuple[str, float], ...]

    def top(self, k: int) -> tuple[str, ...]:
        return tuple(feature for feature, _ in self.ranked[:k])


def _rank_for_anchor(ca: CAResult, anchor: str) -> tuple[tuple[str, float], ...]:
    if anchor not in ca.row_labels:
        raise AnchorUnobserved(f"anchor feature {anchor!r} has no observations")
    i = ca.row_labels.index(anchor)
    scores = ca.G2 @ ca.F2[i]
    # Descending score; canonical column order breaks ties.
    order = sorted(range(len(ca.col_labels)), key=lambda j: (-scores[j], j))
    return tuple((ca.col_labels[j], float(scores[j])) for j in order)


def mine_rule(ca: CAResult, analysis_type: str, kind: str) -> Rule:
    anchors = {"strength": STRENGTH_ANCHOR, "weakness": WEAKNESS_ANCHOR}
    if kind not in anchors:
        raise ValueError(f"kind must be 'strength' or 'weakness', got {kind!r}")
    anchor = anchors[kind][analysis_type]
    return Rule(
        kind=kind,
        analysis_type=analysis_type,
        anchor=anchor,
        category=FEATURE_CATEGORY[anchor],
        ranked=_rank_for_anchor(ca, anchor),
    )


def mine_rules(ca: CAResult, analysis_type: str) -> tuple[Rule, Rule]:
    """The strength rule and the weakness rule, in that order."""
    return (
        mine_rule(ca, analysis_type, "strength"),
        mine_rule(ca, analysis_type, "weakness"),
    )


def mine_other_rules(ca: CAResult, analysis_type: str) -> list[Rule]:
    """Ranked lists for every observed non-anchor batting feature, canonical order."""
    anchors = {STRENGTH_ANCHOR[analysis_type], WEAKNESS_ANCHOR[analysis_type]}
    out = []
    for feature in BATTING_FEATURES:
        if feature in anchors or feature not in ca.row_labels:
            continue
        out.append(
            Rule(
                kind="other",
                analysis_type=analysis_type,
                anchor=feature,
                category=FEATURE_CATEGORY[feature],
                ranked=_rank_for_anchor(ca, feature),
            )
        )
    return out


def mine_all_rules(ca: CAResult, analysis_type: str):
    """Strength and weakness rules (None when the anchor is unobserved) plus others."""
    named: list[Rule | None] = []
    for kind in ("strength", "weakness"):
        try:
            named.append(mine_rule(ca, analysis_type, kind))
        except AnchorUnobserved:
            named.append(None)
    return named[0], named[1], mine_other_rules(ca, analysis_type)


def _verb(anchor: str, plural: bool) -> str:
    # (singular, plural) verb phrases; batting sentences name one player,
    # bowling sentences speak of the batsmen collectively.
    fixed = {
        "attacked": ("attacks", "attack"),
        "beaten": ("is beaten by", "are beaten by"),
        "defended": ("defends", "defend"),
        "out": ("gets out to", "get out to"),
        "0 run": ("scores no runs off", "score no runs off"),
        "front foot": ("plays off the front foot against",) * 2,
        "back foot": ("plays off the back foot against",) * 2,
    }
    if anchor in fixed:
        singular, plural_form = fixed[anchor]
        phrase = plural_form if plural else singular
    elif anchor.endswith(" run"):
        runs = anchor.split()[0]
        phrase = f"score {runs} off" if plural else f"scores {runs} off"
    else:
        phrase = f"plays to {anchor} against"
    if plural and phrase.startswith("plays "):
        phrase = "play " + phrase[len("plays ") :]
    return phrase


def rule_sentence(rule: Rule, player: str, top_k: int = 3) -> str:
    features = list(rule.top(top_k))
    if len(features) > 1:
        joined = ", ".join(features[:-1]) + " or " + features[-1]
    else:
        joined = features[0]
    if rule.analysis_type == "batting":
        return f"{player} {_verb(rule.anchor, plural=False)} {joined} deliveries."
    return f"Against {player}, batsmen {_verb(rule.anchor, plural=True)} {joined} deliveries."


@dataclass(frozen=True)
class BiplotPoint:
    label: str
    side: str
    category: str
    x: float
    y: float
    mass: float


@dataclass(frozen=True)
class BiplotData:
    """Row points of one batting category plus all column points, 2-D."""

    category: str
    points: tuple[BiplotPoint, ...]


def biplot(ca: CAResult, category: str) -> BiplotData:
    if category not in BATTING_CATEGORIES:
        raise ValueError(
            f"category must be one of {tuple(BATTING_CATEGORIES)}, got {category!r}"
        )
    points: list[BiplotPoint] = []
    for feature in BATTING_CATEGORIES[category]:
        if feature not in ca.row_labels:
            continue
        i = ca.row_labels.index(feature)
        points.append(
            BiplotPoint(
                label=feature,
                side="row",
                category=category,
                x=float(ca.F2[i, 0]),
                y=float(ca.F2[i, 1]),
                mass=float(ca.row_masses[i]),
            )
        )
    for j, feature in enumerate(ca.col_labels):
        points.append(
            BiplotPoint(
                label=feature,
                side="column",
                category="bowling",
                x=float(ca.G2[j, 0]),
                y=float(ca.G2[j, 1]),
                mass=float(ca.col_masses[j]),
            )
        )
    return BiplotData(category=category, points=tuple(points))


def biplot_payload(bp: BiplotData) -> dict:
    return {
        "category": bp.category,
        "points": [
            {
                "label": p.label,
                "side": p.side,
                "category": p.category,
                "x": p.x,
                "y": p.y,
                "mass": p.mass,
            }
            for p in bp.points
        ],
    }


_SVG_W = 640
_SVG_H = 480
_SVG_MARGIN = 56
_ROW_COLOR = "#1f77b4"
_COL_COLOR = "#d62728"


def _svg_num(value: float) -> str:
    return format(value, ".2f")


def render_biplot_svg(bp: BiplotData, title: str = "") -> str:
    """Deterministic standalone SVG rendering of a biplot."""
    xs = [p.x for p in bp.points]
    ys = [p.y for p in bp.points]
    xmin, xmax = min(xs + [0.0]), max(xs + [0.0])
    ymin, ymax = min(ys + [0.0]), max(ys + [0.0])
    xpad = (xmax - xmin) * 0.1 or 1.0
    ypad = (ymax - ymin) * 0.1 or 1.0
    xmin, xmax = xmin - xpad, xmax + xpad
    ymin, ymax = ymin - ypad, ymax + ypad

    def sx(x: float) -> float:
        return _SVG_MARGIN + (x - xmin) / (xmax - xmin) * (_SVG_W - 2 * _SVG_MARGIN)

    def sy(y: float) -> float:
        return _SVG_H - _SVG_MARGIN - (y - ymin) / (ymax - ymin) * (_SVG_H - 2 * _SVG_MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect x="0" y="0" width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<line x1="{_svg_num(sx(xmin))}" y1="{_svg_num(sy(0.0))}" '
        f'x2="{_svg_num(sx(xmax))}" y2="{_svg_num(sy(0.0))}" stroke="#cccccc"/>',
        f'<line x1="{_svg_num(sx(0.0))}" y1="{_svg_num(sy(ymin))}" '
        f'x2="{_svg_num(sx(0.0))}" y2="{_svg_num(sy(ymax))}" stroke="#cccccc"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_SVG_W // 2}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{title}</text>'
        )
    for p in bp.points:
        px, py = sx(p.x), sy(p.y)
        if p.side == "row":
            parts.append(
                f'<circle cx="{_svg_num(px)}" cy="{_svg_num(py)}" r="4" fill="{_ROW_COLOR}"/>'
            )
        else:
            parts.append(
                f'<rect x="{_svg_num(px - 3.5)}" y="{_svg_num(py - 3.5)}" '
                f'width="7" height="7" fill="{_COL_COLOR}"/>'
            )
        parts.append(
            f'<text x="{_svg_num(px + 6)}" y="{_svg_num(py - 6)}" '
            f'font-family="sans-serif" font-size="11">{p.label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
