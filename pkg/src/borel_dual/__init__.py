"""Alexander duality toolkit for strongly stable monomial ideals.

The package revolves around a squarefree "grid" polarization that places
the k-th letter of a monomial in column k.  Through it, strongly stable
ideals acquire a duality I -> I* exchanging the roles of variables and
degrees, with irreducible decompositions, Betti tables, local cohomology
Hilbert series, and arithmetic degrees all computable on either side and
cross-checkable against brute-force oracles.
"""

from .core import (
    DegenerateIdealError,
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    RationalSeries,
    borel_closure,
    colon_variable,
    contains,
    height,
    hilbert_series_quotient,
    is_cohen_macaulay,
    is_strongly_stable,
    minimalize,
    monomial_from_word,
    proj_dim_quotient,
    saturate_variable,
)
from .decompose import (
    GridConditionError,
    bpol_decomposition,
    decompose_oracle,
    decompose_strongly_stable,
    grid_components_oracle,
    intersect_components,
    psi,
    right_shift_check,
    top_components,
)
from .duality import (
    alexander_dual,
    ideal_equiv,
    is_squarefree_strongly_stable,
    sigma_decomposition,
    sigma_ideal,
    sigma_monomial,
    star_dual,
)
from .homology import (
    ArithmeticDegree,
    BettiTable,
    LocalCohSeries,
    NotCohenMacaulayError,
    OracleSizeError,
    adeg,
    adeg_top_from_generators,
    betti_oracle,
    canonical_generators,
    ek_betti,
    euler_consistency,
    has_linear_resolution,
    is_cm_via_dual,
    lc_series_via_components,
    lc_series_via_dual,
    lc_series_via_gamma,
)
from .polarize import (
    GridIdeal,
    GridMonomial,
    bpol_ideal,
    bpol_membership,
    bpol_monomial,
    depolarize,
    stdpol_ideal,
    stdpol_monomial,
    transpose,
    verify_polarization,
)
from .verify import CorpusSpec, VerifyReport, check_corpus, random_borel, run_suite

__version__ = "1.0.0"

__all__ = [
    "ArithmeticDegree",
    "BettiTable",
    "CorpusSpec",
    "DegenerateIdealError",
    "GridConditionError",
    "GridIdeal",
    "GridMonomial",
    "LocalCohSeries",
    "Monomial",
    "MonomialIdeal",
    "NotCohenMacaulayError",
    "NotStronglyStableError",
    "OracleSizeError",
    "RationalSeries",
    "VerifyReport",
    "adeg",
    "adeg_top_from_generators",
    "alexander_dual",
    "betti_oracle",
    "borel_closure",
    "bpol_decomposition",
    "bpol_ideal",
    "bpol_membership",
    "bpol_monomial",
    "canonical_generators",
    "check_corpus",
    "colon_variable",
    "contains",
    "decompose_oracle",
    "decompose_strongly_stable",
    "depolarize",
    "ek_betti",
    "euler_consistency",
    "grid_components_oracle",
    "has_linear_resolution",
    "height",
    "hilbert_series_quotient",
    "ideal_equiv",
    "intersect_components",
    "is_cohen_macaulay",
    "is_cm_via_dual",
    "is_squarefree_strongly_stable",
    "is_strongly_stable",
    "lc_series_via_components",
    "lc_series_via_dual",
    "lc_series_via_gamma",
    "minimalize",
    "monomial_from_word",
    "proj_dim_quotient",
    "psi",
    "random_borel",
    "right_shift_check",
    "run_suite",
    "saturate_variable",
    "sigma_decomposition",
    "sigma_ideal",
    "sigma_monomial",
    "star_dual",
    "stdpol_ideal",
    "stdpol_monomial",
    "top_components",
    "transpose",
    "verify_polarization",
]
