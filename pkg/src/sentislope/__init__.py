"""sentislope: lexicon sentiment analytics over ordered short-text corpora.

The pipeline loads a corpus in its temporal order, reduces each record
to tidy lower-case tokens, classifies tokens against a ten-category
emotion lexicon and a two-polarity opinion lexicon, aggregates
per-record counts and signed scores, splits the corpus into even
temporal sequences, and fits locally weighted conditional-mean slopes
with confidence bands to read off trends, extrema, and per-record
deviations within each sequence.
"""

from .corpus import Corpus, SequenceSlice, TextRecord, load_corpus, split_sequences
from .insight import (
    AgreementReport,
    Extremum,
    RecordFlag,
    SequenceSummary,
    find_extrema,
    flag_records,
    lexicon_agreement,
    summarize_sequence,
)
from .lexicon import Category, Lexicon, load_bing, load_nrc, lookup
from .metrics import (
    RecordMetrics,
    emotion_counts,
    polarity_score,
    score_corpus,
    sentiment_count,
)
from .smoother import (
    SeriesPoint,
    SmoothedSeries,
    SmoothParams,
    conditional_mean_at,
    local_fit,
    smooth_series,
    tricube_weight,
)
from .textprep import (
    StopList,
    Token,
    drop_duplicate_tokens,
    normalize,
    remove_stopwords,
    tokenize,
)

__version__ = "0.1.0"
