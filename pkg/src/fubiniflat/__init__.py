"""Exact enumeration and verification toolkit for flattened Fubini rankings.

Fubini rankings encode competition outcomes with ties; restricting to rankings
whose run leading terms increase (strictly or weakly, with runs of strict or
weak ascents) gives four flattened families.  This package streams the
families exhaustively, evaluates the closed-form counts for them, constructs
extremal witnesses, and checks the open identities, always in exact integer
or rational arithmetic.
"""

from .analysis import (
    InadmissibleContent,
    MedianProfile,
    construct_canonical,
    construct_flat_runs,
    construct_min_runs_wflat_runs,
    exists_flat_runs,
    first_inadmissible_index,
    flat_wruns_k_bound,
    max_runs_bound_weak,
    max_runs_wflat_wruns,
    median_profile,
    min_runs_wflat_runs,
    unique_single_run,
)
from .config import (
    CeilingExceeded,
    Limits,
    resolve_limits,
)
from .conjectures import (
    CheckPoint,
    ConjectureReport,
    ConvergenceFailure,
    EulerianRow,
    EulerianRowMismatch,
    SeriesCoefficients,
    TruncatedSeries,
    check_eulerian_conjecture,
    check_genfunc,
    eulerian_row,
    eulerian_survey,
    eulerian_weighted_sum,
    flat_runs_totals,
    genfunc_coefficients,
)
from .core import (
    Content,
    FlatMode,
    FlattenVariant,
    InvalidContentError,
    NotFubiniError,
    Ranking,
    ReducedContent,
    RunDecomposition,
    RunMode,
    classify,
    content_of,
    is_flattened,
    is_fubini,
    leading_terms,
    runs,
)
from .enumeration import (
    CountTable,
    StirlingPermutation,
    compositions,
    count_filtered,
    count_table,
    descents,
    fubini_by_reduced_content,
    fubini_stream,
    multiset_permutations,
    stirling_stream,
    weak_compositions,
)
from .formulas import (
    HypothesisViolation,
    binomial,
    count_bk,
    end_in_one_with_k_runs,
    ends_in_one_count,
    fubini_number,
    weakly_monotone_count,
    wsenum_count,
    wwenum_count,
)
from .oeis import (
    BFile,
    BFileParseError,
    SequenceComparison,
    compare_prefix,
    load_bfile,
    parse_bfile,
)
from .verify import (
    FormulaCheck,
    verify_end_in_one_k_runs,
    verify_ends_in_one,
    verify_formula,
    verify_wsenum,
    verify_wwenum,
)

__version__ = "0.1.0"
