"""opid: an exact-arithmetic laboratory for overpartition identities.

The package enumerates overpartitions with distinct parts, expands the
matching generating functions as exact truncated series, executes the
explicit bijections between the combinatorial families, and machine-verifies
every identity three ways where possible (enumeration, sum side, closed
form), reporting first-failure witnesses.
"""

from .bijections import (
    CASE_TWIN,
    MAPS,
    MappingError,
    MappingResult,
    f0,
    f0_inv,
    f1,
    f1_inv,
    h0,
    h0_inv,
    h1,
    h1_inv,
    merge1,
    merge2,
    pair_transform,
    phi,
    phi_inv,
    psi,
    psi_inv,
    sigma,
    split1,
    split2,
)
from .identities import (
    BIJECTION_IDS,
    IDENTITY_TAGS,
    SERIES_TAGS,
    BijectionFault,
    CoefficientFault,
    Report,
    run_all,
    series_side,
    verify,
    verify_bijection,
)
from .overpartitions import (
    COUNTERS,
    FAMILIES,
    FamilyStats,
    Overpartition,
    Part,
    PartError,
    StructureDecomposition,
    classify_structure,
    count,
    distinct_partitions,
    enumerate_distinct,
    family_members,
    family_membership,
    largest_singleton,
    parse,
    target_class,
)
from .series import (
    Monomial,
    OddCoefficientError,
    OrderMismatchError,
    QGAUSS_VARIANTS,
    SeriesError,
    TruncatedSeries,
    TruncationError,
    first_mismatch,
    invert_factor,
    monomial_series,
    pochhammer,
    qgauss_check,
    qgauss_closed_side,
    qgauss_sum_side,
)

__version__ = "0.1.0"
