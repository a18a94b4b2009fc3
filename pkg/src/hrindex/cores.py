"""h-cores, the survivors of the baseline core, and the recent-core gap."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, YearWindow, ranked_counts
from .indices import VariantSpec, evaluate_variant, h_integer, windowed_h


def h_core(corpus: Corpus, pub_win: YearWindow, cit_win: YearWindow) -> tuple[str, ...]:
    """The h-defining papers, ranked; ties at rank h go to older papers, then lower ids."""
    return windowed_h(corpus, pub_win, cit_win).core_ids


def core_survivors(corpus: Corpus, y: int, r: int) -> int:
    """h-index of the baseline (classic, year ``y``) core after dropping papers
    published before ``r``."""
    if r > y:
        raise ValueError(f"start year {r} after evaluation year {y}")
    cit_win = YearWindow.upto(y)
    core = set(h_core(corpus, YearWindow.upto(y), cit_win))
    counts = [
        c
        for pid, c in ranked_counts(corpus, YearWindow(r, y), cit_win)
        if pid in core
    ]
    return h_integer(counts)


def recent_core_gap(corpus: Corpus, y: int, r: int) -> int:
    """Papers in the h_r core that have not reached the baseline core."""
    h_r = evaluate_variant(corpus, VariantSpec.recent(r), y).h_int
    return h_r - core_survivors(corpus, y, r)


@dataclass(frozen=True)
class CoreReport:
    y: int
    baseline_h: int
    survivors_by_r: dict[int, int]
    h_r_by_r: dict[int, int]
    gap_by_r: dict[int, int]


def core_report(corpus: Corpus, y: int) -> CoreReport:
    """Survivors, h_r and gap for every start year from the career start to ``y``."""
    r0 = corpus.r0
    if y < r0:
        raise ValueError(f"evaluation year {y} precedes career start {r0}")
    survivors, h_r, gap = {}, {}, {}
    for r in range(r0, y + 1):
        survivors[r] = core_survivors(corpus, y, r)
        h_r[r] = evaluate_variant(corpus, VariantSpec.recent(r), y).h_int
        gap[r] = h_r[r] - survivors[r]
    return CoreReport(y, h_r[r0], survivors, h_r, gap)
