"""Lexical dynamics of texts and parallel corpora.

Type/token summaries, vocabulary-growth curves, Heaps and Zipf power fits,
source/translation comparison and cohort dispersion of Heaps coefficients.
"""

__version__ = "0.1.0"

from .compare import (
    LevellingReport,
    PairReport,
    compare_pair,
    compare_tables,
    fit_deltas,
    length_ratio,
    levelling_out,
)
from .errors import (
    CompareError,
    FitError,
    GenError,
    IngestError,
    LexDynError,
    StatsError,
)
from .fitting import PowerFit, pearson, power_fit, predict
from .growth import (
    CurvePoint,
    GrowthCurve,
    cumulative_curve,
    fragment_table,
    growth_curve,
    heaps_fit,
)
from .ingest import (
    Document,
    Fragment,
    chunk_by_delimiter,
    chunk_by_lines,
    make_document,
    normalize,
    read_document,
    tokenize,
)
from .lexstats import FreqTable, LexSummary, frequency_table, summary, zipf_fit
from .synthgen import ZipfSpec, zipf_text
