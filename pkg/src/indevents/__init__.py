"""Independent events: disjoint weights, sharp union bounds, inclusion-exclusion,
an exact rectangle realizer and Monte Carlo cross-checks."""

from .bounds import (
    best_lower_union,
    dependent_counterexample,
    lower_union_bound,
    lower_union_given_sum,
    lower_union_given_sum_infinite,
    opposite_extremals,
    sandwich,
    sharpness_gap,
    upper_sum_bound,
    upper_sum_given_union,
    upper_sum_given_union_infinite,
)
from .errors import (
    CapExceeded,
    Diverges,
    DomainError,
    IndEventsError,
    InfeasibleWeights,
    ModeError,
    NegativeDenominator,
    NoTailInfo,
    NotConvergent,
    RatioTooLarge,
)
from .families import SeriesFamily
from .inclexcl import bonferroni, elementary_sums, inclusion_exclusion, tail_certificate
from .montecarlo import (
    SampleConfig,
    borel_cantelli_scan,
    estimate_union_bernoulli,
    estimate_union_geometric,
)
from .numbers import DisjointWeights, ProbSeq
from .realizer import (
    Construction,
    Rect,
    export_construction,
    import_construction,
    intersection_measure,
    realize,
    union_measure,
    verify_independence,
)
from .transform import forward, inverse, limit_sum_T, union_prob

__version__ = "0.1.0"
