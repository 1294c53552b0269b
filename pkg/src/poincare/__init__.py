"""Optimal-degree Poincaré multipliers for positive quadratics and their products."""

from .compare import ComparisonReport, c_vector, compare, limit_check, meissner_c_closed, ratio, ratio_table
from .composer import Factorization, compose_multiplier, factor
from .errors import (
    CertificateFailure,
    DegreeMismatch,
    DomainError,
    NonConvergence,
    NotPositiveError,
    NotRefutable,
    RealRootsError,
    SearchExhausted,
)
from .multiplier import (
    MultiplierCertificate,
    Provenance,
    check,
    meissner,
    meissner_monic,
    optimal_degree,
    riggs_closed_form,
    riggs_determinant,
    riggs_recurrence,
    verify,
)
from .optimality import InfeasibilityWitness, cone_feasible, minimal_degree_search, refute_degree
from .poly import (
    PolarQuadratic,
    Polynomial,
    Positivity,
    classify_positivity,
    coeffs_nonneg,
    from_polar,
    multiply,
    to_polar,
)
from .tmatrix import TMatrix, build_framework, closed_form_T, compute_T, compute_T_recurrence

__version__ = "0.1.0"
