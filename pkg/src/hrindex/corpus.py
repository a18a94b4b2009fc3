"""Per-paper, per-year citation records and their canonical CSV/JSON forms."""

from __future__ import annotations

import csv
import io
import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

MIN_YEAR = 1500
MAX_YEAR = 2200


class CorpusError(ValueError):
    """Raised for malformed citation reports or invalid records."""


def check_year(value: int, what: str = "year") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CorpusError(f"{what} must be an integer, got {value!r}")
    if not MIN_YEAR <= value <= MAX_YEAR:
        raise CorpusError(f"{what} {value} outside [{MIN_YEAR}, {MAX_YEAR}]")
    return value


@dataclass(frozen=True)
class YearWindow:
    """Closed interval of calendar years; ``None`` means unbounded on that side."""

    start: Optional[int] = None
    end: Optional[int] = None

    def __post_init__(self):
        if self.start is not None and self.end is not None and self.start > self.end:
            raise ValueError(f"window start {self.start} after end {self.end}")

    @classmethod
    def upto(cls, end: int) -> "YearWindow":
        return cls(None, end)

    def __contains__(self, year: int) -> bool:
        return (self.start is None or self.start <= year) and (
            self.end is None or year <= self.end
        )

    @property
    def bounded(self) -> bool:
        return self.start is not None and self.end is not None

    def __str__(self) -> str:
        lo = "-inf" if self.start is None else str(self.start)
        hi = "+inf" if self.end is None else str(self.end)
        return f"[{lo},{hi}]"


@dataclass(frozen=True)
class PaperRecord:
    """One publication with the citations it received in each calendar year.

    Zero counts are dropped on construction so that two records describing
    the same citation history compare equal regardless of how they were built.
    """

    id: str
    pub_year: int
    citations_by_year: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise CorpusError("paper id must be a non-empty string")
        check_year(self.pub_year, f"publication year of {self.id!r}")
        cleaned = {}
        for year, count in self.citations_by_year.items():
            check_year(year, f"citation year of {self.id!r}")
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise CorpusError(f"{self.id!r}: invalid count {count!r} in {year}")
            if count:
                cleaned[year] = count
        object.__setattr__(
            self, "citations_by_year", MappingProxyType(dict(sorted(cleaned.items())))
        )

    def __eq__(self, other):
        if not isinstance(other, PaperRecord):
            return NotImplemented
        return (self.id, self.pub_year, dict(self.citations_by_year)) == (
            other.id,
            other.pub_year,
            dict(other.citations_by_year),
        )

    def __hash__(self):
        return hash((self.id, self.pub_year, tuple(self.citations_by_year.items())))

    @cached_property
    def _prefix(self) -> tuple[list[int], list[int]]:
        years = list(self.citations_by_year)
        return years, [0, *accumulate(self.citations_by_year.values())]

    def citations(self, window: YearWindow) -> int:
        years, sums = self._prefix
        lo = 0 if window.start is None else bisect_left(years, window.start)
        hi = len(years) if window.end is None else bisect_right(years, window.end)
        return sums[hi] - sums[lo] if hi > lo else 0

    @property
    def total(self) -> int:
        return self._prefix[1][-1]


@dataclass(frozen=True)
class Corpus:
    """One author's publications. Immutable; ``r0`` is the earliest publication year."""

    papers: tuple[PaperRecord, ...] = ()
    author_label: str = ""

    def __post_init__(self):
        papers = tuple(self.papers)
        seen = set()
        for paper in papers:
            if paper.id in seen:
                raise CorpusError(f"duplicate paper id {paper.id!r}")
            seen.add(paper.id)
        object.__setattr__(self, "papers", papers)

    def __len__(self) -> int:
        return len(self.papers)

    @property
    def r0(self) -> int:
        if not self.papers:
            raise CorpusError("career start is undefined for an empty corpus")
        return min(p.pub_year for p in self.papers)

    @property
    def last_year(self) -> int:
        """Latest publication or citation year, the natural end of a grid."""
        if not self.papers:
            raise CorpusError("empty corpus has no year span")
        return max(
            max(p.pub_year, *p.citations_by_year) if p.citations_by_year else p.pub_year
            for p in self.papers
        )

    def citation_year_span(self) -> Optional[tuple[int, int]]:
        years = [y for p in self.papers for y in p.citations_by_year]
        return (min(years), max(years)) if years else None

    def shifted(self, delta_years: int) -> "Corpus":
        """Same corpus with every year moved by ``delta_years``."""
        return Corpus(
            tuple(
                PaperRecord(
                    p.id,
                    p.pub_year + delta_years,
                    {y + delta_years: c for y, c in p.citations_by_year.items()},
                )
                for p in self.papers
            ),
            self.author_label,
        )


def citations_in_window(paper: PaperRecord, cit_win: YearWindow) -> int:
    """Citations received by ``paper`` in the years of ``cit_win``."""
    return paper.citations(cit_win)


def ranked_counts(
    corpus: Corpus, pub_win: YearWindow, cit_win: YearWindow
) -> list[tuple[str, int]]:
    """Papers published inside ``pub_win`` paired with their windowed citation counts.

    Ordered by count descending, then publication year ascending, then id, so
    the result does not depend on the order papers appear in the corpus.
    """
    rows = [
        (-p.citations(cit_win), p.pub_year, p.id)
        for p in corpus.papers
        if p.pub_year in pub_win
    ]
    rows.sort()
    return [(pid, -neg) for neg, _, pid in rows]


# -- canonical CSV ----------------------------------------------------------


def _parse_int(text: str, where: str) -> int:
    text = text.strip()
    try:
        return int(text, 10)
    except ValueError:
        raise CorpusError(f"{where}: not an integer: {text!r}") from None


def parse_citation_report(
    text: str | Iterable[str], strict: bool = True, author_label: str = ""
) -> Corpus:
    """Parse the canonical CSV: ``id,pub_year,<year>,<year+1>,...`` one row per paper."""
    if isinstance(text, str):
        text = io.StringIO(text)
    reader = csv.reader(text)
    header = next(reader, None)
    if header is None:
        raise CorpusError("missing header")
    header = [h.strip() for h in header]
    if header[:2] != ["id", "pub_year"]:
        raise CorpusError(f"header must start with 'id,pub_year', got {header[:2]}")
    years = [check_year(_parse_int(h, "header"), "header year") for h in header[2:]]
    if any(b != a + 1 for a, b in zip(years, years[1:])):
        raise CorpusError("header year columns must be consecutive ascending years")

    papers = []
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != len(header):
            raise CorpusError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        pid = row[0].strip()
        pub_year = _parse_int(row[1], f"line {lineno}")
        counts = {}
        for year, cell in zip(years, row[2:]):
            count = _parse_int(cell, f"line {lineno}, year {year}")
            if count < 0:
                raise CorpusError(f"line {lineno}: negative count in {year}")
            if count and strict and year < pub_year:
                raise CorpusError(
                    f"line {lineno}: {pid!r} cited in {year} before publication in {pub_year}"
                )
            counts[year] = count
        try:
            papers.append(PaperRecord(pid, pub_year, counts))
        except CorpusError as exc:
            raise CorpusError(f"line {lineno}: {exc}") from None
    return Corpus(tuple(papers), author_label)


def serialize_citation_report(corpus: Corpus) -> str:
    span = corpus.citation_year_span()
    years = list(range(span[0], span[1] + 1)) if span else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "pub_year", *years])
    for p in corpus.papers:
        writer.writerow([p.id, p.pub_year, *(p.citations_by_year.get(y, 0) for y in years)])
    return buf.getvalue()


# -- JSON equivalent --------------------------------------------------------


def corpus_from_json(data: str | Mapping, strict: bool = True) -> Corpus:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"invalid JSON: {exc}") from None
    if not isinstance(data, Mapping) or not isinstance(data.get("papers"), list):
        raise CorpusError("JSON corpus must be an object with a 'papers' array")
    papers = []
    for i, item in enumerate(data["papers"]):
        try:
            pid, pub_year, cites = item["id"], item["pub_year"], item.get("citations", {})
            counts = {_parse_int(str(y), f"paper {i}"): c for y, c in cites.items()}
        except (KeyError, TypeError, AttributeError):
            raise CorpusError(f"paper {i}: needs 'id', 'pub_year' and a 'citations' object") from None
        paper = PaperRecord(pid, pub_year, counts)
        if strict and any(y < paper.pub_year for y in paper.citations_by_year):
            raise CorpusError(f"paper {pid!r} cited before publication in {pub_year}")
        papers.append(paper)
    return Corpus(tuple(papers), str(data.get("author", "")))


def corpus_to_json(corpus: Corpus) -> str:
    doc = {
        "author": corpus.author_label,
        "papers": [
            {
                "id": p.id,
                "pub_year": p.pub_year,
                "citations": {str(y): c for y, c in p.citations_by_year.items()},
            }
            for p in corpus.papers
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_corpus(path, strict: bool = True) -> Corpus:
    """Read a corpus file; ``.json`` files use the JSON form, anything else CSV."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from None
    if path.suffix.lower() == ".json":
        corpus = corpus_from_json(text, strict=strict)
    else:
        corpus = parse_citation_report(text, strict=strict)
    if not corpus.author_label:
        corpus = Corpus(corpus.papers, path.stem)
    return corpus


def make_corpus(rows: Sequence[tuple], author_label: str = "") -> Corpus:
    """Build a corpus from ``(id, pub_year, {year: count})`` tuples."""
    return Corpus(tuple(PaperRecord(*row) for row in rows), author_label)
