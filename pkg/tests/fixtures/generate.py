"""Regenerate the committed fixtures in this directory.

Run from the repository root after installing the package:

    python tests/fixtures/generate.py

Fixtures are committed so tests compare against frozen bytes; rerunning this
script must reproduce them exactly.
"""

from __future__ import annotations

import sys
from datetime import date
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent))

from synthgen import FAST_BOWLERS, SPIN_BOWLERS, synth_records  # noqa: E402

from cricrules.ca import correspondence_analysis  # noqa: E402
from cricrules.cli import main as cli_main  # noqa: E402
from cricrules.confrontation import FilterTuple, build_cm  # noqa: E402
from cricrules.corpus import Corpus, save_corpus  # noqa: E402
from cricrules.lexicon import default_lexicon  # noqa: E402
from cricrules.rules import mine_rules  # noqa: E402

SMALL = HERE / "corpus_small.tsv"
TWOEPOCH = HERE / "corpus_twoepoch.tsv"
ROSTER_FILE = HERE / "roster.tsv"
RULES_FILE = HERE / "rules_human.tsv"
GOLDEN_ANALYSIS = HERE / "golden_analysis.json"
GOLDEN_VALIDATION = HERE / "golden_validation.json"

WINDOW_SMALL = (date(2019, 6, 1), date(2021, 3, 31))
EPOCH_1 = (date(2017, 5, 1), date(2018, 4, 30))
EPOCH_2 = (date(2018, 5, 1), date(2019, 4, 30))


def build_small_corpus() -> None:
    records = synth_records(
        301, 400, *WINDOW_SMALL,
        batsman="A Larkin",
        bowlers={"E Navarro": "fast", "H Sodhi": "spin"},
        match_prefix="S",
    )
    records += synth_records(
        302, 32, *WINDOW_SMALL,
        batsman="E Navarro",
        bowlers={"H Sodhi": "spin"},
        match_prefix="SB",
    )
    records += synth_records(
        303, 8, *WINDOW_SMALL,
        batsman="E Navarro",
        bowlers={"A Larkin": "spin"},
        match_prefix="SC",
    )
    save_corpus(Corpus.from_records(records), SMALL)


def build_twoepoch_corpus() -> None:
    records = synth_records(101, 5000, *EPOCH_1, match_prefix="E1M", unrostered_share=0.02)
    records += synth_records(202, 5000, *EPOCH_2, match_prefix="E2M", unrostered_share=0.02)
    save_corpus(Corpus.from_records(records), TWOEPOCH)


def build_roster() -> None:
    lines = [f"{name}\tfast" for name in FAST_BOWLERS]
    lines += [f"{name}\tspin" for name in SPIN_BOWLERS]
    lines.append("A Larkin\tspin")
    ROSTER_FILE.write_text("\n".join(lines) + "\n", encoding="utf-8")


def build_rule_file() -> None:
    """Top-3 strength and weakness pairs of the two-epoch career analysis."""
    from cricrules.corpus import load_corpus

    corpus, _ = load_corpus(TWOEPOCH)
    flt = FilterTuple(player="A Larkin")
    ca = correspondence_analysis(build_cm(corpus.records, default_lexicon(), flt))
    strength, weakness = mine_rules(ca, "batting")
    lines = [f"{rule.anchor}\t{feature}" for rule in (strength, weakness) for feature in rule.top(3)]
    RULES_FILE.write_text("\n".join(lines) + "\n", encoding="utf-8")


def build_goldens() -> None:
    rc = cli_main(
        [
            "analyze", str(SMALL),
            "--player", "A Larkin",
            "--type", "bat",
            "-o", str(GOLDEN_ANALYSIS),
        ]
    )
    assert rc == 0, rc
    rc = cli_main(
        [
            "validate", str(TWOEPOCH),
            "--player", "A Larkin",
            "--type", "bat",
            "--cutoff", "2018-05-01",
            "-o", str(GOLDEN_VALIDATION),
        ]
    )
    assert rc == 0, rc


if __name__ == "__main__":
    build_small_corpus()
    build_twoepoch_corpus()
    build_roster()
    build_rule_file()
    build_goldens()
    for path in (SMALL, TWOEPOCH, ROSTER_FILE, RULES_FILE, GOLDEN_ANALYSIS, GOLDEN_VALIDATION):
        print(f"wrote {path} ({path.stat().st_size} bytes)")
