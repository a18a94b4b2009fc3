"""Evolution grids h_r(y), final profiles and multi-author comparisons."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Literal, Mapping, Optional, Sequence

from .corpus import Corpus, YearWindow, check_year
from .cores import core_report
from .indices import VariantSpec, evaluate_variant

DEFAULT_PRECISION = 4


def format_decimal(value: Fraction | int, precision: int = DEFAULT_PRECISION) -> str:
    """Fixed-point rendering with round-half-even, computed on the exact value."""
    if precision < 0:
        raise ValueError("precision must be non-negative")
    scaled = round(Fraction(value) * 10**precision)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    if not precision:
        return sign + digits
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


def _csv(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class EvolutionGrid:
    """h_r(y) for every start year r and evaluation year y with r <= y.

    ``h_real`` holds the interpolated values, ``h_int`` their truncations.
    ``interpolated`` picks which of the two the wide form shows.
    """

    r_years: tuple[int, ...]
    y_years: tuple[int, ...]
    h_real: Mapping[tuple[int, int], Fraction]
    h_int: Mapping[tuple[int, int], int]
    interpolated: bool = True

    @property
    def values(self) -> Mapping[tuple[int, int], Fraction | int]:
        return self.h_real if self.interpolated else self.h_int

    def cells(self):
        """(r, y) pairs in row-major order."""
        return [(r, y) for r in self.r_years for y in self.y_years if r <= y]

    def to_long_csv(self, precision: int = DEFAULT_PRECISION) -> str:
        rows = [("r", "y", "h_interpolated", "h_integer")]
        rows += [
            (r, y, format_decimal(self.h_real[r, y], precision), self.h_int[r, y])
            for r, y in self.cells()
        ]
        return _csv(rows)

    def to_wide_csv(self, precision: int = DEFAULT_PRECISION) -> str:
        rows = [("r", *self.y_years)]
        for r in self.r_years:
            row = [r]
            for y in self.y_years:
                if r > y:
                    row.append("")
                elif self.interpolated:
                    row.append(format_decimal(self.h_real[r, y], precision))
                else:
                    row.append(self.h_int[r, y])
            rows.append(row)
        return _csv(rows) if self.r_years else _csv([("r",)])

    def to_json(self, precision: int = DEFAULT_PRECISION) -> str:
        return _dumps(
            {
                "r_years": list(self.r_years),
                "y_years": list(self.y_years),
                "cells": [
                    {
                        "r": r,
                        "y": y,
                        "h_interpolated": format_decimal(self.h_real[r, y], precision),
                        "h_integer": self.h_int[r, y],
                    }
                    for r, y in self.cells()
                ],
            }
        )


def _years(window: YearWindow, what: str) -> tuple[int, ...]:
    if not window.bounded:
        raise ValueError(f"{what} range must be bounded, got {window}")
    return tuple(range(window.start, window.end + 1))


def evolution_grid(
    corpus: Corpus, r_range: YearWindow, y_range: YearWindow, interpolated: bool = True
) -> EvolutionGrid:
    r_years = _years(r_range, "start-year")
    y_years = _years(y_range, "evaluation-year")
    h_real, h_int = {}, {}
    for r in r_years:
        for y in y_years:
            if r <= y:
                res = evaluate_variant(corpus, VariantSpec.recent(r), y)
                h_real[r, y] = res.h_real
                h_int[r, y] = res.h_int
    return EvolutionGrid(r_years, y_years, h_real, h_int, interpolated)


def corpus_grid(corpus: Corpus, interpolated: bool = True) -> EvolutionGrid:
    """Grid over the whole career: r and y both run from r0 to the last data year."""
    if not corpus.papers:
        return EvolutionGrid((), (), {}, {}, interpolated)
    span = YearWindow(corpus.r0, corpus.last_year)
    return evolution_grid(corpus, span, span, interpolated)


@dataclass(frozen=True)
class ProfilePoint:
    r: int
    h_r: int
    survivors: int
    gap: int


@dataclass(frozen=True)
class ProfileSeries:
    """h_r(y), baseline-core survivors and their gap for each start year r."""

    y: int
    points: tuple[ProfilePoint, ...]
    label: str = ""

    def h_series(self) -> list[tuple[int, int]]:
        return [(p.r, p.h_r) for p in self.points]

    def shifted(self, delta_years: int) -> "ProfileSeries":
        check_year(self.y + delta_years, "shifted year")
        moved = shift_series([(p.r, p) for p in self.points], delta_years)
        return replace(
            self,
            y=self.y + delta_years,
            points=tuple(replace(p, r=r) for r, p in moved),
        )

    def to_csv(self, percent: bool = False, precision: int = DEFAULT_PRECISION) -> str:
        header = ["r", "h_r", "survivors", "gap"]
        pct = {}
        if percent:
            header.append("h_r_percent")
            pct = dict(percent_of_baseline(self.h_series())) if self.points else {}
        rows = [header]
        for p in self.points:
            row = [p.r, p.h_r, p.survivors, p.gap]
            if percent:
                row.append(format_decimal(pct[p.r], precision))
            rows.append(row)
        return _csv(rows)

    def to_json(self, percent: bool = False, precision: int = DEFAULT_PRECISION) -> str:
        pct = dict(percent_of_baseline(self.h_series())) if percent and self.points else {}
        points = []
        for p in self.points:
            item = {"r": p.r, "h_r": p.h_r, "survivors": p.survivors, "gap": p.gap}
            if percent:
                item["h_r_percent"] = format_decimal(pct[p.r], precision)
            points.append(item)
        return _dumps({"y": self.y, "points": points})


def final_profile(corpus: Corpus, y: int, label: str = "") -> ProfileSeries:
    report = core_report(corpus, y)
    points = tuple(
        ProfilePoint(r, report.h_r_by_r[r], report.survivors_by_r[r], report.gap_by_r[r])
        for r in sorted(report.h_r_by_r)
    )
    return ProfileSeries(y, points, label or corpus.author_label)


def percent_of_baseline(series: Sequence[tuple[int, Fraction | int]]) -> list[tuple[int, Fraction]]:
    """Each value as a percentage of the first one, exactly."""
    if not series:
        raise ValueError("empty series")
    base = Fraction(series[0][1])
    if base == 0:
        raise ZeroDivisionError("baseline value is zero")
    return [(year, Fraction(v) * 100 / base) for year, v in series]


def shift_series(series: Sequence[tuple[int, object]], delta_years: int) -> list[tuple[int, object]]:
    out = []
    for year, value in series:
        check_year(year + delta_years, "shifted year")
        out.append((year + delta_years, value))
    return out


@dataclass(frozen=True)
class ComparisonTable:
    """Profiles of several authors on a common start-year axis.

    In ``career_age`` mode each profile has been evaluated ``shift`` years
    earlier (or later) and moved by ``shift`` so career starts coincide.
    """

    y: int
    align: str
    labels: tuple[str, ...]
    profiles: tuple[ProfileSeries, ...]
    shifts: tuple[int, ...]

    def rows(self) -> list[tuple[int, dict[str, int]]]:
        by_label = [{p.r: p.h_r for p in prof.points} for prof in self.profiles]
        years = sorted({r for d in by_label for r in d})
        return [
            (r, {label: d[r] for label, d in zip(self.labels, by_label) if r in d})
            for r in years
        ]

    def to_csv(self) -> str:
        rows = [("r", *self.labels)]
        for r, vals in self.rows():
            rows.append((r, *(vals.get(label, "") for label in self.labels)))
        return _csv(rows)

    def to_json(self) -> str:
        return _dumps(
            {
                "y": self.y,
                "align": self.align,
                "columns": list(self.labels),
                "shifts": dict(zip(self.labels, self.shifts)),
                "rows": [{"r": r, "values": vals} for r, vals in self.rows()],
            }
        )


def _unique_labels(labels: Sequence[str]) -> tuple[str, ...]:
    out, seen = [], {}
    for i, label in enumerate(labels):
        label = label or f"corpus{i + 1}"
        seen[label] = seen.get(label, 0) + 1
        out.append(label if seen[label] == 1 else f"{label}#{seen[label]}")
    return tuple(out)


def compare(
    corpora: Sequence[Corpus],
    y: int,
    align: Literal["calendar", "career_age"] = "calendar",
    career_starts: Optional[Sequence[Optional[int]]] = None,
) -> ComparisonTable:
    """Final profiles of several corpora side by side.

    With ``career_age`` alignment the first corpus is the reference: every
    other corpus is evaluated at ``y - shift`` and its profile moved by
    ``shift = reference_r0 - own_r0``, i.e. the same time since career start.
    ``career_starts`` overrides the derived r0 of individual corpora.
    """
    if len(corpora) < 2:
        raise ValueError("comparison needs at least two corpora")
    if align not in ("calendar", "career_age"):
        raise ValueError(f"unknown alignment {align!r}")
    starts = list(career_starts or [None] * len(corpora))
    if len(starts) != len(corpora):
        raise ValueError("one career start override per corpus expected")
    r0s = [s if s is not None else c.r0 for c, s in zip(corpora, starts)]
    labels = _unique_labels([c.author_label for c in corpora])
    profiles, shifts = [], []
    for corpus, r0, label in zip(corpora, r0s, labels):
        shift = r0s[0] - r0 if align == "career_age" else 0
        profile = final_profile(corpus, y - shift, label)
        if r0 != corpus.r0:
            profile = replace(profile, points=tuple(p for p in profile.points if p.r >= r0))
        profiles.append(profile.shifted(shift))
        shifts.append(shift)
    return ComparisonTable(y, align, labels, tuple(profiles), tuple(shifts))
