"""galleon: exact enumeration of time-consistent galled trees.

Counts of rooted binary phylogenetic networks whose reticulation cycles
are node-disjoint and time-consistent, unlabeled and leaf-labeled, by
leaves and by gall count.  Every count is computed by several mutually
independent methods (an exact recursion, generating-function fixed points,
direct per-gall-count series, closed forms, and exhaustive generation at
small sizes) and the package's verification layer checks them against
each other.
"""

from .asymptotics import (
    AsymptoticParams,
    QUOTED_UNLABELED,
    SingularityEstimate,
    asym_labeled,
    asym_labeled_stirling,
    asym_unlabeled,
    class_ratio,
    estimate_singularity,
    estimated_unlabeled_params,
)
from .compositions import (
    compositions,
    multinomial,
    palindromic_compositions,
    weighted_compositions,
)
from .counts import max_galls
from .labeled import (
    LabeledTable,
    bivariate_labeled,
    count_labeled,
    count_labeled_trees,
    double_factorial,
    eg_labeled_direct,
    labeled_gallfree_closed_form,
    labeled_gf,
    labeled_total,
    zhang_one_gall,
)
from .series import (
    EGF,
    OGF,
    BivarTruncSeries,
    FixedPointError,
    NonIntegralCoefficientError,
    TruncSeries,
    divide,
    egf_to_counts,
    halve,
    mset2,
    ogf_to_counts,
    power,
    seq_plus,
    set2,
    solve_fixed_point,
    solve_fixed_point_bivar,
    substitute_square,
)
from .shapes import (
    GalledShape,
    ResourceLimitError,
    automorphism_size,
    canonical_serialize,
    count_galls,
    gall_census,
    generate_unlabeled,
    labeled_census,
    parse_shape,
)
from .unlabeled import (
    UnlabeledTable,
    bivariate_unlabeled,
    count_unlabeled,
    eg_series_direct,
    unlabeled_gf,
    unlabeled_total,
)
from .verify import (
    VerificationReport,
    cross_check_labeled,
    cross_check_unlabeled,
    oracle_check,
    run_verification,
    totals_discrepancy_report,
)

__version__ = "0.1.0"
