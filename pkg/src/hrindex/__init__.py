"""Time-windowed Hirsch-type bibliometric indicators.

h_r(y) is the h-index in year y counting only papers published from year r
on. Around it the package provides interpolated h, h-cores and their
survivors, g and g_r, the author impact factor, and the evolution grids and
profiles used to compare researchers.
"""

from .corpus import (
    Corpus,
    CorpusError,
    PaperRecord,
    YearWindow,
    citations_in_window,
    corpus_from_json,
    corpus_to_json,
    load_corpus,
    make_corpus,
    parse_citation_report,
    ranked_counts,
    serialize_citation_report,
)
from .cores import CoreReport, core_report, core_survivors, h_core, recent_core_gap
from .evolution import (
    ComparisonTable,
    EvolutionGrid,
    ProfilePoint,
    ProfileSeries,
    compare,
    corpus_grid,
    evolution_grid,
    final_profile,
    format_decimal,
    percent_of_baseline,
    shift_series,
)
from .indices import (
    IndexResult,
    InvalidVariantError,
    UndefinedAIFError,
    VariantKind,
    VariantSpec,
    aif,
    evaluate_variant,
    g_integer,
    h_integer,
    h_interpolated,
    windowed_g,
    windowed_h,
)

__version__ = "0.1.0"
