"""Exact left-invariant geometry of metric 2-step nilpotent Lie algebras.

Everything is computed over the rationals (or rational polynomials in the
central coordinates); no floating point is used anywhere.
"""

from .abelian import coordinate_abelian_census, is_abelian_subspace, nonisomorphism_evidence
from .algebra import (
    AlgebraError,
    ElementVector,
    MetricTwoStepAlgebra,
    NonSkewError,
    from_j_maps,
    from_structure_constants,
    j_of,
    j_squared,
)
from .classify import (
    Inapplicable,
    NRStructure,
    Obstruction,
    PropertyReport,
    ScalarInvariants,
    has_parallel_ricci,
    heisenberg_classification,
    is_type_A,
    naturally_reductive_structure,
    property_report,
    scalar_invariants,
)
from .exact import BACKEND
from .homogeneous import verify_homogeneous_structure
from .isospectral import (
    IsospectralVerdict,
    NilmanifoldData,
    criterion_bracket_lattice,
    criterion_eigenvalues,
    criterion_kernel_lattices,
    gordon_wilson,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BACKEND",
    "ElementVector",
    "Inapplicable",
    "IsospectralVerdict",
    "MetricTwoStepAlgebra",
    "NRStructure",
    "NilmanifoldData",
    "NonSkewError",
    "Obstruction",
    "PropertyReport",
    "ScalarInvariants",
    "coordinate_abelian_census",
    "criterion_bracket_lattice",
    "criterion_eigenvalues",
    "criterion_kernel_lattices",
    "from_j_maps",
    "from_structure_constants",
    "gordon_wilson",
    "has_parallel_ricci",
    "heisenberg_classification",
    "is_abelian_subspace",
    "is_type_A",
    "j_of",
    "j_squared",
    "naturally_reductive_structure",
    "nonisomorphism_evidence",
    "property_report",
    "scalar_invariants",
    "verify_homogeneous_structure",
]
