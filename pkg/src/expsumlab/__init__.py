"""Desk-scale experiments on short exponential sums of bounded
multiplicative functions: segmented sieves, certified sup-norm scans,
Fourier-uniformity statistics, pretentious-distance minimization,
prime-ratio graphs with exact walk counts, frequency-model fitting, and
Fejér-weighted correlation identities.
"""

from ._version import __version__
from .characters import character, characters_mod
from .correlations import (
    Chowla2Report,
    CorrelationReport,
    CsChainReport,
    L3Report,
    SequenceSpec,
    averaged_chowla2,
    chowla2_one_closed_form,
    cs_chain_check,
    l3_bound_check,
    triple_direct,
    triple_report,
    triple_spectral,
    window_triple,
)
from .errors import (
    BudgetError,
    CertificationError,
    CoverageError,
    EmptyFitError,
    InconsistencyError,
    ParameterError,
)
from .expsum import (
    Interval,
    SupCertificate,
    completion_search,
    dense_grid_sup,
    extract_frequencies,
    logpoint_mean_square,
    short_sum,
    sup_alpha,
    sup_alpha_coeffs,
)
from .pretend import (
    DistanceResult,
    conjugate_product_spec,
    pretentious_distance,
    reevaluate_argmin,
)
from .proofgraph import (
    EdgeRecord,
    FrequencyAssignment,
    MixingReport,
    ModelFit,
    MsdReport,
    PrimeProductCount,
    PrimeRatioGraph,
    WalkCountResult,
    assign_frequencies,
    build_graph,
    complete_graph,
    count_prime_products,
    fit_frequency_model,
    mixing_count,
    msd_check,
    synthetic_assignment,
    walk_count,
)
from .reports import (
    emit_csv,
    emit_json,
    jsonable,
    make_meta,
    payload_text,
    render_csv,
    render_json,
)
from .sieve import ValueTable, primes_in, sieve_range
from .specs import FunctionSpec, SpecEvaluator, get_evaluator
from .uniformity import (
    FixedAlphaReport,
    IntervalFamily,
    ToleranceConfig,
    UniformityReport,
    archimedean_demo,
    build_family,
    fixed_alpha_statistic,
    rational_candidates,
    strict_slot_range,
    uniformity_statistic,
)

__all__ = [
    "__version__",
    "BudgetError",
    "CertificationError",
    "Chowla2Report",
    "CorrelationReport",
    "CoverageError",
    "CsChainReport",
    "DistanceResult",
    "EdgeRecord",
    "EmptyFitError",
    "FixedAlphaReport",
    "FrequencyAssignment",
    "FunctionSpec",
    "InconsistencyError",
    "Interval",
    "IntervalFamily",
    "L3Report",
    "MixingReport",
    "ModelFit",
    "MsdReport",
    "ParameterError",
    "PrimeProductCount",
    "PrimeRatioGraph",
    "SequenceSpec",
    "SpecEvaluator",
    "SupCertificate",
    "ToleranceConfig",
    "UniformityReport",
    "ValueTable",
    "WalkCountResult",
    "archimedean_demo",
    "assign_frequencies",
    "averaged_chowla2",
    "build_family",
    "build_graph",
    "character",
    "characters_mod",
    "chowla2_one_closed_form",
    "complete_graph",
    "completion_search",
    "conjugate_product_spec",
    "count_prime_products",
    "cs_chain_check",
    "dense_grid_sup",
    "emit_csv",
    "emit_json",
    "extract_frequencies",
    "fit_frequency_model",
    "fixed_alpha_statistic",
    "get_evaluator",
    "jsonable",
    "l3_bound_check",
    "logpoint_mean_square",
    "make_meta",
    "mixing_count",
    "msd_check",
    "payload_text",
    "pretentious_distance",
    "primes_in",
    "rational_candidates",
    "reevaluate_argmin",
    "render_csv",
    "render_json",
    "short_sum",
    "sieve_range",
    "strict_slot_range",
    "synthetic_assignment",
    "sup_alpha",
    "sup_alpha_coeffs",
    "triple_direct",
    "triple_report",
    "triple_spectral",
    "uniformity_statistic",
    "walk_count",
    "window_triple",
]
