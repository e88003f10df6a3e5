"""Exact octonion arithmetic and polynomial image classification.

The public surface: build an :class:`OctonionAlgebra`, parse polynomials
over the free magma, and ask what their image is -- four-way for
multilinear inputs (`classify_multilinear`), Zero/Scalars/Pure/Dense for
semihomogeneous ones (`classify_semihomogeneous`), Zero/Pure under the
bracket product on pure octonions (`classify_malcev`) -- with constructive
witnesses via `realize_target`, `realize_malcev_target` and `map_pure`.
"""

from .algebra import (
    Eigenvalues,
    Octonion,
    OctonionAlgebra,
    STANDARD_PARAMS,
    doubling_multiply,
    random_octonion,
)
from .classify import (
    ANOMALOUS,
    DENSE,
    FULL,
    PURE,
    SCALARS,
    ZERO,
    BasicEvaluation,
    Classification,
    ConsistencyReport,
    basic_evaluations,
    classify_multilinear,
    realize_target,
    sample_consistency,
)
from .errors import MathViolation, OctimageError
from .fields import RATIONAL, REAL, FieldMode
from .malcev import (
    classify_malcev,
    malcev_identity_residual,
    malcev_product,
    realize_malcev_target,
)
from .orbits import (
    Automorphism,
    BasicTriple,
    automorphism_from_triples,
    complete_basic_triple,
    identity_automorphism,
    map_pure,
)
from .polynomials import (
    DegreeProfile,
    ImplicitAssociationWarning,
    Polynomial,
    anticommutator,
    associator,
    commutator,
    parse_polynomial,
    scalar_image_example,
)
from .semihomogeneous import (
    ExcludedRatioReport,
    RatioSample,
    classify_semihomogeneous,
    eigenvalue_ratio_stat,
    excluded_ratio_check,
    ratio_function,
)
from .zerotest import GridCertificate, grid_vanishes

__version__ = "0.1.0"

__all__ = [
    "ANOMALOUS", "Automorphism", "BasicEvaluation", "BasicTriple",
    "Classification", "ConsistencyReport", "DENSE", "DegreeProfile",
    "Eigenvalues", "ExcludedRatioReport", "FULL", "FieldMode",
    "GridCertificate", "ImplicitAssociationWarning", "MathViolation",
    "Octonion", "OctonionAlgebra", "OctimageError", "PURE", "Polynomial",
    "RATIONAL", "REAL", "RatioSample", "SCALARS", "STANDARD_PARAMS", "ZERO",
    "anticommutator", "associator", "automorphism_from_triples",
    "basic_evaluations", "classify_malcev", "classify_multilinear",
    "classify_semihomogeneous", "commutator", "complete_basic_triple",
    "doubling_multiply", "eigenvalue_ratio_stat", "excluded_ratio_check",
    "grid_vanishes", "identity_automorphism", "malcev_identity_residual",
    "malcev_product", "map_pure", "parse_polynomial", "random_octonion",
    "ratio_function", "realize_malcev_target", "realize_target",
    "sample_consistency", "scalar_image_example",
]
