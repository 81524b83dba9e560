"""Agreement modelling for interval-valued survey data.

Build fuzzy sets from participants' interval responses, measure how strongly
the participants agree (the agreement ratio), and compare sets with Jaccard
similarity and classic attributes (height, centroid, support, core).
"""

from .agreement import GammaBreakdown, GammaTerm, gamma_alpha, gamma_exact, jaccard
from .errors import (
    AgreementError,
    CombinatorialLimit,
    EmptyCollection,
    EmptySet,
    EmptySupport,
    InvalidAlpha,
    InvalidCuts,
    InvalidDomain,
    InvalidInterval,
    ParseError,
    RangeError,
    TooFewSources,
    UnknownGroup,
    UnknownTerm,
)
from .fuzzyset import (
    AlphaCut,
    Attributes,
    Gaussian,
    MembershipFunction,
    PiecewiseConstant,
    PiecewiseLinear,
    Sampled,
    alpha_cut,
    alpha_length,
    attributes,
    mu,
    trapezoidal,
    triangular,
)
from .iaa import AgreementFS, build_iaa
from .intervals import (
    DisjointRegion,
    Interval,
    IntervalCollection,
    collection,
    level_lengths,
    level_sets,
    make_interval,
    tuple_length_oracle,
    union_region,
)
from .survey import (
    AgreementReport,
    ReportRow,
    SurveyDataset,
    SurveyRecord,
    emit_series,
    group_collection,
    load_survey,
    report,
)

__version__ = "0.1.0"
