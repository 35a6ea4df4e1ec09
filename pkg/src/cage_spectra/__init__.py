"""Spectral feasibility toolkit for k-regular graphs of even girth 2d and
small excess e over the Moore bound.

The package provides exact integer polynomial families on a three-term
recurrence, graph structural checks with exact matrix-identity verifiers, the
tridiagonal intersection-matrix moment oracle, and a certified feasibility
engine: root isolation by exact dyadic bisection, dual-route eigenvalue
multiplicities, rational-interval integrality certificates, and the
product-gap nonexistence test for girth >= 14.
"""

from .errors import (
    BracketSeedError,
    CageSpectraError,
    DegreeRangeError,
    DisconnectedGraphError,
    EvenHalfGirthError,
    ExcessRangeError,
    Graph6ParseError,
    IllConditionedError,
    OddExcessError,
    ParameterDomainError,
    RegimeViolationError,
    StructuralRefusal,
)
from .feasibility import (
    FeasibilityReport,
    GapVerdict,
    MultiplicityAssessment,
    MultiplicitySet,
    RootRecord,
    SkippedTriple,
    SymmetryReport,
    VERDICT_ADMISSIBLE,
    VERDICT_GAP,
    VERDICT_INTEGRALITY,
    VERDICT_OUTSIDE,
    f_weight,
    g_weight,
    gap_check,
    isolate_roots,
    multiplicity_closed_form,
    multiplicity_symmetry_checks,
    multiplicity_trig,
    scan,
    spectral_feasibility,
    transcendental_residual,
    validate_parameters,
)
from .graphs import (
    CrosscheckReport,
    DistanceMatrixSet,
    Graph,
    IdentityCheck,
    StructuralVerdict,
    antipodal_spectrum,
    catalog,
    catalog_entry,
    catalog_names,
    distance_matrices,
    girth,
    moore_bound,
    parse_graph6,
    spectral_crosscheck,
    structural_check,
    verify_allones_identity,
    verify_path_count_identity,
)
from .intersection import (
    IntersectionMatrix,
    bd_entry00,
    build_bd,
    ld_entry00,
    minimal_polynomial_check,
    trace_identity_check,
)
from .intervals import RatInterval, poly_enclosure
from .polynomials import (
    ExactRational,
    IntPolynomial,
    derivative,
    dickson_family,
    eval_rational,
    h_closed_form,
    h_roots_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "BracketSeedError",
    "CageSpectraError",
    "CrosscheckReport",
    "DegreeRangeError",
    "DisconnectedGraphError",
    "DistanceMatrixSet",
    "EvenHalfGirthError",
    "ExactRational",
    "ExcessRangeError",
    "FeasibilityReport",
    "GapVerdict",
    "Graph",
    "Graph6ParseError",
    "IdentityCheck",
    "IllConditionedError",
    "IntPolynomial",
    "IntersectionMatrix",
    "MultiplicityAssessment",
    "MultiplicitySet",
    "OddExcessError",
    "ParameterDomainError",
    "RatInterval",
    "RegimeViolationError",
    "RootRecord",
    "SkippedTriple",
    "StructuralRefusal",
    "StructuralVerdict",
    "SymmetryReport",
    "VERDICT_ADMISSIBLE",
    "VERDICT_GAP",
    "VERDICT_INTEGRALITY",
    "VERDICT_OUTSIDE",
    "antipodal_spectrum",
    "bd_entry00",
    "build_bd",
    "catalog",
    "catalog_entry",
    "catalog_names",
    "derivative",
    "dickson_family",
    "distance_matrices",
    "eval_rational",
    "f_weight",
    "g_weight",
    "gap_check",
    "girth",
    "h_closed_form",
    "h_roots_closed_form",
    "isolate_roots",
    "ld_entry00",
    "minimal_polynomial_check",
    "moore_bound",
    "multiplicity_closed_form",
    "multiplicity_symmetry_checks",
    "multiplicity_trig",
    "parse_graph6",
    "poly_enclosure",
    "scan",
    "spectral_crosscheck",
    "spectral_feasibility",
    "structural_check",
    "trace_identity_check",
    "transcendental_residual",
    "validate_parameters",
    "verify_allones_identity",
    "verify_path_count_identity",
]
