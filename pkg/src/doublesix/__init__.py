"""Exact invariant calculus for six general points in the plane.

The package follows one geometric thread in exact rational arithmetic:
six points in general position determine a cubic surface with its 27
lines and 36 double sixes, an associated six-point configuration cut
out by plane quintics, a five-dimensional bracket invariant vector with
a single quartic relation and a signed symmetric-group action, and a
pencil of six-nodal sextics whose members certify nontrivial
three-torsion on the double cover branched along them.

Everything is computed over the rationals with no floating point, so
every verdict is a proof by construction.
"""

from .association import (
    ContractionError,
    DoubleSixRealization,
    exceptional_conics,
    sample_points_on_conic,
    second_model,
)
from .coble import (
    CERTIFIED_RELATION_VARIANT,
    CONJUGACY_REPRESENTATIVES,
    GENERATOR_PARTITIONS,
    GENERATOR_WEIGHTS,
    REFERENCE_ACTION_ROWS,
    ActionRecord,
    CharacterReport,
    CobleVector,
    SchlaefliCheck,
    bracket,
    character_report,
    coble_vector,
    relation_residual,
    representative_perm,
    s6_action,
    schlaefli_sign_check,
    y_basis,
)
from .forms import (
    DegenerateEliminationError,
    TernaryForm,
    monomials_of_degree,
    resultant_eliminate,
)
from .lattice import (
    E,
    E_TOTAL,
    F,
    K,
    L,
    DoubleSix,
    PicClass,
    basis_determinant,
    blowdown_line_class,
    double_sixes,
    lines_27,
)
from .linalg import Matrix, Rational, determinant, inverse, kernel_basis, rank, rat, solve
from .perms import Perm, all_perms, class_size
from .plane import (
    REF6,
    Config6,
    CurveSystem,
    DegenerateFiveTupleError,
    GeneralPositionVerdict,
    PointP2,
    TangentCone,
    conic_through,
    is_general_position,
    linear_system,
    projective_equivalence,
    projective_stabilizer,
    random_general_config,
    tangent_cone,
)
from .torsion import (
    NodalSextic,
    NodeDiagnosis,
    Pencil,
    SmoothnessVerdict,
    TorsionCertificate,
    TorsionRank,
    certify,
    certify_pencil,
    conic_product_pencil,
    node_profile,
    random_nodal_sextic,
    smooth_elsewhere,
    smooth_screen,
    torsion_rank,
)

__version__ = "0.1.0"

__all__ = [
    "ActionRecord",
    "CERTIFIED_RELATION_VARIANT",
    "CONJUGACY_REPRESENTATIVES",
    "CharacterReport",
    "CobleVector",
    "Config6",
    "ContractionError",
    "CurveSystem",
    "DegenerateEliminationError",
    "DegenerateFiveTupleError",
    "DoubleSix",
    "DoubleSixRealization",
    "E",
    "E_TOTAL",
    "F",
    "GENERATOR_PARTITIONS",
    "GENERATOR_WEIGHTS",
    "GeneralPositionVerdict",
    "K",
    "L",
    "Matrix",
    "NodalSextic",
    "NodeDiagnosis",
    "Pencil",
    "Perm",
    "PicClass",
    "PointP2",
    "REF6",
    "REFERENCE_ACTION_ROWS",
    "Rational",
    "SchlaefliCheck",
    "SmoothnessVerdict",
    "TangentCone",
    "TernaryForm",
    "TorsionCertificate",
    "TorsionRank",
    "all_perms",
    "basis_determinant",
    "blowdown_line_class",
    "bracket",
    "certify",
    "certify_pencil",
    "character_report",
    "class_size",
    "coble_vector",
    "conic_product_pencil",
    "conic_through",
    "determinant",
    "double_sixes",
    "exceptional_conics",
    "inverse",
    "is_general_position",
    "kernel_basis",
    "linear_system",
    "lines_27",
    "monomials_of_degree",
    "node_profile",
    "projective_equivalence",
    "projective_stabilizer",
    "random_general_config",
    "random_nodal_sextic",
    "rank",
    "rat",
    "relation_residual",
    "representative_perm",
    "resultant_eliminate",
    "s6_action",
    "sample_points_on_conic",
    "schlaefli_sign_check",
    "second_model",
    "smooth_elsewhere",
    "smooth_screen",
    "solve",
    "tangent_cone",
    "torsion_rank",
    "y_basis",
]
