"""Exact universal splitting rings over pluggable base rings.

Build the splitting ring of a monic polynomial three independent ways --
normal-form rewriting on the n! basis, regular-representation operators,
and a recursive companion-matrix realization -- and cross-verify them.
"""

from .errors import (
    CapExceeded,
    IndexOutOfRange,
    InexactDivision,
    InfiniteRing,
    LengthMismatch,
    NonCentralCoefficients,
    NonMonic,
    NotAUnit,
    ParseError,
    PreconditionViolated,
    RingMismatch,
    SplitRingError,
)
from .ideals import (
    CentralQuotient,
    IdealHandle,
    as_table_ring,
    central_quotient,
    commutator_ideal,
    table_ring_from_subset,
    upper_triangular_ring,
)
from .matrices import SqMatrix, det, poly_at_matrix, rank, rank_profile_mod
from .multipoly import (
    MPoly,
    alternating_coeffs,
    build_relations_closed,
    build_relations_recursive,
    complete_homogeneous_prefix,
    delta,
    elementary_symmetric,
    symmetrize_check,
    verify_magia2,
)
from .realization import (
    RealizationReport,
    ab_convert,
    a_to_b,
    b_to_a,
    build_realization,
    companion,
    derived_at_companion_pattern,
    derived_poly,
    eval_at_companion,
    krylov_min_poly_degree,
    monomial_matrices,
    poly_from_a,
    poly_from_b,
    reduced_quotient_poly,
    sigma_of_matrices,
    verify_realization,
)
from .rings import (
    INTEGERS,
    RATIONALS,
    FiniteTableRing,
    IntegerRing,
    MatrixRing,
    ModularRing,
    Poly,
    PolyCoefRing,
    QuotientRing,
    RationalRing,
    Ring,
    RingElem,
    ZeroRing,
    parse_ring,
    poly_eval,
    poly_from_ints,
    quotient_ring,
)
from .splitting import (
    SplitElem,
    SplitRing,
    gamma_injectivity_check,
    new_split_ring,
    normal_form,
    regular_representation,
    universal_factorization_check,
)
from .symmetry import (
    Perm,
    RootSystem,
    all_perms,
    apply_perm,
    is_automorphism_system,
    permutation_system,
    scaling_system,
    theta_injectivity,
)

__version__ = "0.1.0"
