from fractions import Fraction
from math import floor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIXTURES, corpora, records
from hrindex import (
    Corpus,
    VariantSpec,
    YearWindow,
    compare,
    core_survivors,
    corpus_grid,
    evaluate_variant,
    evolution_grid,
    final_profile,
    format_decimal,
    load_corpus,
    make_corpus,
    percent_of_baseline,
    shift_series,
)
from oracles import GridOracle, brute_h, geometric_h, windowed_counts


def test_single_paper_cells():
    c = make_corpus([("a", 2000, {2001: 1})])
    grid = evolution_grid(c, YearWindow(2000, 2001), YearWindow(2000, 2001))
    assert grid.h_int[2000, 2000] == 0
    assert grid.h_int[2000, 2001] == 1
    assert grid.h_int[2001, 2001] == 0
    assert (2001, 2000) not in grid.h_int


def test_unbounded_range_rejected():
    with pytest.raises(ValueError):
        evolution_grid(Corpus(), YearWindow(None, 2000), YearWindow(1990, 2000))


@given(corpora.filter(len))
def test_r0_row_is_classic_trajectory(c):
    grid = evolution_grid(c, YearWindow(c.r0, c.r0), YearWindow(c.r0, 2006))
    for y in grid.y_years:
        classic = evaluate_variant(c, VariantSpec.classic(), y)
        assert grid.h_real[c.r0, y] == classic.h_real


@given(records(max_papers=10))
def test_grid_against_oracles(recs):
    c = make_corpus(recs)
    grid = evolution_grid(c, YearWindow(1988, 2005), YearWindow(1990, 2006))
    matrix = GridOracle(recs, 1980, 2006)
    for r, y in grid.cells():
        counts = windowed_counts(recs, r, y, None, y)
        assert grid.h_int[r, y] == matrix.h(r, y) == brute_h(counts)
        assert grid.h_real[r, y] == geometric_h(counts)


@given(corpora)
def test_grid_laws(c):
    grid = evolution_grid(c, YearWindow(1990, 2005), YearWindow(1990, 2005))
    for values in (grid.h_real, grid.h_int):
        for r, y in grid.cells():
            if (r, y + 1) in values:
                assert values[r, y + 1] >= values[r, y]
            if (r + 1, y) in values:
                assert values[r + 1, y] <= values[r, y]
    assert all(floor(grid.h_real[k]) == grid.h_int[k] for k in grid.cells())


def test_empty_corpus_grid():
    grid = corpus_grid(Corpus())
    assert grid.cells() == []
    assert grid.to_long_csv() == "r,y,h_interpolated,h_integer\n"


def test_long_and_wide_forms_hold_the_same_cells():
    c = load_corpus(FIXTURES / "small.csv")
    grid = corpus_grid(c)
    long_cells = {}
    for line in grid.to_long_csv().splitlines()[1:]:
        r, y, real, _ = line.split(",")
        long_cells[int(r), int(y)] = real
    wide = grid.to_wide_csv().splitlines()
    years = [int(y) for y in wide[0].split(",")[1:]]
    wide_cells = {}
    for line in wide[1:]:
        r, *vals = line.split(",")
        wide_cells.update({(int(r), y): v for y, v in zip(years, vals) if v})
    assert wide_cells == long_cells


class TestProfile:
    def test_first_year_only(self):
        c = make_corpus([("a", 2000, {2000: 2}), ("b", 2000, {2000: 1}), ("c", 2001, {2001: 5})])
        prof = final_profile(c, 2000)
        assert len(prof.points) == 1
        p = prof.points[0]
        assert (p.r, p.h_r, p.survivors, p.gap) == (2000, 1, 1, 0)

    def test_r0_has_full_core(self):
        prof = final_profile(load_corpus(FIXTURES / "schreiber_shaped.csv"), 2014)
        first = prof.points[0]
        assert first.r == 1976 and first.survivors == first.h_r == 35

    @given(records().filter(bool), st.integers(1995, 2005))
    def test_profile_matches_grid_and_brute_force(self, recs, y):
        c = make_corpus(recs)
        if c.r0 > y:
            with pytest.raises(ValueError):
                final_profile(c, y)
            return
        prof = final_profile(c, y)
        grid = evolution_grid(c, YearWindow(c.r0, y), YearWindow(y, y))
        assert [p.r for p in prof.points] == list(range(c.r0, y + 1))
        for p in prof.points:
            assert p.h_r == grid.h_int[p.r, y] == brute_h(windowed_counts(recs, p.r, y, None, y))
            assert p.survivors == core_survivors(c, y, p.r) <= p.h_r
            assert p.gap == p.h_r - p.survivors
        hs = [p.h_r for p in prof.points]
        ss = [p.survivors for p in prof.points]
        assert hs == sorted(hs, reverse=True) and ss == sorted(ss, reverse=True)


class TestPercent:
    def test_constant(self):
        assert [v for _, v in percent_of_baseline([(2000, 5), (2001, 5)])] == [100, 100]

    def test_witten_shaped_point(self):
        out = dict(percent_of_baseline([(1976, 130), (1990, 74)]))
        assert out == {1976: 100, 1990: Fraction(7400, 130)}
        assert format_decimal(out[1990], 1) == "56.9"

    def test_zero_baseline(self):
        with pytest.raises(ZeroDivisionError):
            percent_of_baseline([(2000, 0), (2001, 3)])

    def test_fixture_profile(self):
        prof = final_profile(load_corpus(FIXTURES / "witten_shaped.csv"), 2014)
        pct = dict(percent_of_baseline(prof.h_series()))
        assert pct[1990] == Fraction(7400, 130)


class TestShift:
    def test_identity(self):
        s = [(2000, 3), (2001, 2)]
        assert shift_series(s, 0) == s
        assert shift_series(shift_series(s, 18), -18) == s

    def test_forward(self):
        assert shift_series([(1958, 7)], 18) == [(1976, 7)]

    def test_out_of_bounds(self):
        with pytest.raises(ValueError):
            shift_series([(2190, 1)], 18)


class TestCompare:
    def test_identical_corpora(self):
        c = load_corpus(FIXTURES / "small.csv")
        table = compare([c, c], 2003)
        assert table.profiles[0].points == table.profiles[1].points
        assert table.labels == ("small", "small#2")
        assert all(len(set(vals.values())) == 1 for _, vals in table.rows())

    def test_rank_inversion(self):
        # a: strong early papers, nothing recent; b: modest but recent
        a = make_corpus([(f"a{i}", 1990, {1995: 20}) for i in range(8)], "a")
        b = make_corpus(
            [(f"b{i}", 1990, {1995: 2}) for i in range(3)]
            + [(f"n{i}", 2005, {2008: 5}) for i in range(5)],
            "b",
        )
        rows = dict(compare([a, b], 2010).rows())
        assert rows[1990]["a"] > rows[1990]["b"]
        assert rows[2005]["a"] < rows[2005]["b"]

    def test_career_age_alignment_of_shifted_self(self):
        c = load_corpus(FIXTURES / "small.csv")
        older = c.shifted(-18)
        table = compare([c, older], 2003, align="career_age")
        assert table.shifts == (0, 18)
        assert table.profiles[1].y == 2003
        assert table.profiles[0].points == table.profiles[1].points

    def test_career_start_override(self):
        c = load_corpus(FIXTURES / "small.csv")
        table = compare([c, c], 2003, career_starts=[None, 2001])
        assert [p.r for p in table.profiles[1].points] == [2001, 2002, 2003]

    def test_needs_two(self):
        with pytest.raises(ValueError):
            compare([Corpus()], 2000)


@pytest.mark.parametrize(
    "value, places, text",
    [
        (Fraction(30, 11), 4, "2.7273"),
        (Fraction(7, 2), 0, "4"),
        (Fraction(5, 2), 0, "2"),
        (Fraction(1, 8), 2, "0.12"),
        (Fraction(3, 8), 2, "0.38"),
        (24, 4, "24.0000"),
        (Fraction(-1, 3), 3, "-0.333"),
    ],
)
def test_format_decimal(value, places, text):
    assert format_decimal(value, places) == text
