"""Width exponents of weighted sequence-space embeddings, certified at desk scale.

The library computes the exact asymptotic exponents of Kolmogorov and
Gelfand numbers for embeddings of weighted Besov-type sequence spaces
l_{q1}(2^{j*delta} l_{p1}(alpha)) -> l_{q2}(l_{p2}), and checks them
numerically: block-allocation upper bounds, single-block factorization
lower bounds, and log-log slope fits against the case tables.
"""

from .allocator import (
    GREEDY,
    PAPER_STEP3,
    PAPER_STEP4,
    AllocationPlan,
    IdealNormParams,
    WidthSequence,
    default_max_diagonal,
    delta3_tail,
    greedy_allocation,
    ideal_norm,
    lower_bound_sequence,
    paper_allocation_step3,
    paper_allocation_step4,
    plan_bound,
    scale_tail,
    upper_bound_sequence,
)
from .errors import (
    BoundaryCase,
    EnumerationTooLarge,
    HypothesisFailure,
    InfeasibleConstraints,
    InsufficientPoints,
    LimitingCase,
    NonPositiveValue,
    NotCompact,
    OracleTooLarge,
    RegimeMismatch,
    UnsupportedRegion,
    WidthError,
)
from .exponents import (
    ComparisonVerdict,
    RegimeDecision,
    compare_widths,
    compare_widths_ratio,
    gelfand_exponent,
    gelfand_exponent_ratio,
    kolmogorov_exponent,
    kolmogorov_exponent_ratio,
)
from .finwidths import (
    FiniteWidthQuery,
    ModelWidth,
    coordinate_oracle,
    dualize,
    gelfand_model,
    kolmogorov_model,
)
from .params import (
    INF,
    DerivedQuantities,
    EmbeddingParams,
    ExtReal,
    derive,
    is_compact,
    parse_params,
    validate,
)
from .seqmodel import (
    BlockCell,
    SequenceSpaceSpec,
    SparseSequence,
    block_cardinality,
    block_scale,
    cell_points,
    make_block_cell,
    norm,
    weight_at,
)
from .verify import (
    GridScanReport,
    SlopeCheckResult,
    SlopeReport,
    axiom_mutation_check,
    axiom_suite,
    fit_slope,
    slope_check,
    table_mutation_check,
    table_scan,
)

__version__ = "0.1.0"
