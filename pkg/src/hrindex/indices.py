"""Windowed Hirsch-type indices: integer and interpolated h, g, AIF and named variants."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .corpus import Corpus, YearWindow, ranked_counts

DEFAULT_AIF_SPAN = 5


class InvalidVariantError(ValueError):
    pass


class UndefinedAIFError(ArithmeticError):
    """No papers were published in the AIF window, so the average is undefined."""


def h_integer(counts: Sequence[int]) -> int:
    """Largest h such that the h-th entry of the non-increasing ``counts`` is >= h."""
    h = 0
    for rank, c in enumerate(counts, start=1):
        if c < rank:
            break
        h = rank
    return h


def h_interpolated(counts: Sequence[int]) -> Fraction:
    """Where the rank/citation polyline crosses the diagonal, as an exact fraction.

    The segment between ranks h and h+1 is intersected with ``citations == rank``;
    a zero count is assumed past the end of the list. Returns 0 when h is 0.
    """
    h = h_integer(counts)
    if h == 0:
        return Fraction(0)
    c_h = counts[h - 1]
    c_next = counts[h] if h < len(counts) else 0
    drop = c_h - c_next
    return Fraction(c_h + h * drop, 1 + drop)


def g_integer(counts: Sequence[int], allow_padding: bool = False) -> int:
    """Largest g whose top-g papers hold at least g**2 citations.

    With ``allow_padding`` the list is extended by uncited papers, so g may
    exceed the number of papers.
    """
    g = 0
    total = 0
    for rank, c in enumerate(counts, start=1):
        total += c
        if total < rank * rank:
            return g
        g = rank
    if allow_padding:
        while total >= (g + 1) ** 2:
            g += 1
    return g


@dataclass(frozen=True)
class IndexResult:
    h_int: int
    h_real: Fraction
    core_ids: tuple[str, ...]
    pub_win: YearWindow
    cit_win: YearWindow


def windowed_h(corpus: Corpus, pub_win: YearWindow, cit_win: YearWindow) -> IndexResult:
    ranked = ranked_counts(corpus, pub_win, cit_win)
    counts = [c for _, c in ranked]
    h = h_integer(counts)
    return IndexResult(
        h_int=h,
        h_real=h_interpolated(counts),
        core_ids=tuple(pid for pid, _ in ranked[:h]),
        pub_win=pub_win,
        cit_win=cit_win,
    )


def windowed_g(
    corpus: Corpus, pub_win: YearWindow, cit_win: YearWindow, allow_padding: bool = False
) -> int:
    counts = [c for _, c in ranked_counts(corpus, pub_win, cit_win)]
    return g_integer(counts, allow_padding)


class VariantKind(enum.Enum):
    CLASSIC = "classic"
    RECENT = "recent"
    STOPPED = "stopped"
    FIALA_H3 = "h3"
    FIALA_H3PRIME = "h3prime"
    FIALA_H4 = "h4"
    FIALA_H4PRIME = "h4prime"
    PF_H5 = "h5"
    INCREMENTAL = "incremental"


@dataclass(frozen=True)
class VariantSpec:
    """A named index variant. ``param`` is the start year (RECENT), stop year
    (STOPPED) or window span in years (INCREMENTAL); unused otherwise."""

    kind: VariantKind
    param: Optional[int] = None

    def __post_init__(self):
        needs_param = self.kind in (VariantKind.RECENT, VariantKind.STOPPED, VariantKind.INCREMENTAL)
        if needs_param and self.param is None:
            raise InvalidVariantError(f"{self.kind.value} needs a parameter")
        if not needs_param and self.param is not None:
            raise InvalidVariantError(f"{self.kind.value} takes no parameter")
        if self.kind is VariantKind.INCREMENTAL and self.param < 1:
            raise InvalidVariantError(f"incremental span must be >= 1, got {self.param}")

    @classmethod
    def classic(cls):
        return cls(VariantKind.CLASSIC)

    @classmethod
    def recent(cls, r: int):
        return cls(VariantKind.RECENT, r)

    @classmethod
    def stopped(cls, s: int):
        return cls(VariantKind.STOPPED, s)

    @classmethod
    def incremental(cls, span: int):
        return cls(VariantKind.INCREMENTAL, span)

    def windows(self, y: int) -> tuple[YearWindow, YearWindow]:
        """Publication and citation windows for evaluation year ``y``."""
        k, p = self.kind, self.param
        if k is VariantKind.CLASSIC:
            return YearWindow(None, y), YearWindow(None, y)
        if k is VariantKind.RECENT:
            if p > y:
                raise InvalidVariantError(f"start year {p} after evaluation year {y}")
            return YearWindow(p, y), YearWindow(None, y)
        if k is VariantKind.STOPPED:
            if p > y:
                raise InvalidVariantError(f"stop year {p} after evaluation year {y}")
            return YearWindow(None, p), YearWindow(None, y)
        if k is VariantKind.FIALA_H3:
            return YearWindow(y - 3, y - 1), YearWindow(y - 3, y - 1)
        if k is VariantKind.FIALA_H3PRIME:
            return YearWindow(y - 3, y - 1), YearWindow(None, y - 1)
        if k is VariantKind.FIALA_H4:
            return YearWindow(y - 2, y - 1), YearWindow(y - 4, y - 1)
        if k is VariantKind.FIALA_H4PRIME:
            return YearWindow(y - 2, y - 1), YearWindow(y - 3, y - 1)
        if k is VariantKind.PF_H5:
            return YearWindow(None, y), YearWindow(y - 4, y)
        # INCREMENTAL
        return YearWindow(y - p, y), YearWindow(y - p, y)

    def __str__(self):
        return self.kind.value if self.param is None else f"{self.kind.value}({self.param})"


def evaluate_variant(corpus: Corpus, variant: VariantSpec, y: int) -> IndexResult:
    return windowed_h(corpus, *variant.windows(y))


def aif(corpus: Corpus, y: int, span: int = DEFAULT_AIF_SPAN) -> Fraction:
    """Author impact factor: citations received in year ``y`` by the papers
    published in the ``span`` preceding years, per paper."""
    if span < 1:
        raise ValueError(f"AIF span must be >= 1, got {span}")
    window = YearWindow(y - span, y - 1)
    eligible = [p for p in corpus.papers if p.pub_year in window]
    if not eligible:
        raise UndefinedAIFError(f"no papers published in {window}, AIF({y}) is undefined")
    received = sum(p.citations_by_year.get(y, 0) for p in eligible)
    return Fraction(received, len(eligible))
