"""Exact verification of twisted-character factorizations over Q(w).

Evaluates classical-group characters at root-of-unity-twisted points with
exact cyclotomic arithmetic, classifies t-cores, and checks that each
twisted character splits into the predicted signed product of quotient
characters.  Includes generating-function machinery for the associated
partition families.
"""

from .characters import (
    DegeneratePointError,
    GroupType,
    SamplingError,
    sample_points,
    twisted_points,
    weyl_character,
)
from .cyclotomic import CycloElem, CycloField, cyclotomic_poly, field, omega_pow
from .factorization import (
    TheoremId,
    VerificationReport,
    check_block_det_lemma,
    epsilon,
    lhs_value,
    predicted_vanishing,
    rhs_value,
    verify,
)
from .linalg import det
from .partitions import (
    CoreClass,
    FrobeniusCoords,
    Partition,
    ResidueProfile,
    beta_set,
    classify_core,
    conjugate,
    frobenius,
    from_beta_set,
    hook_content,
    is_z_asymmetric,
    mu_padded,
    partitions_of,
    partitions_up_to,
    rank,
    residue_counts,
    sigma_c_sign,
    sigma_sign,
    size,
    t_core,
    t_core_strips,
    t_quotient,
)
from .series import (
    LatticeVec,
    SeriesZ,
    enum_z_asymmetric,
    enum_z_cores,
    gf_z_asymmetric,
    gf_z_cores,
    phi,
    phi_inverse,
    theta_f,
)

__version__ = "0.1.0"

__all__ = [
    "CoreClass",
    "CycloElem",
    "CycloField",
    "DegeneratePointError",
    "FrobeniusCoords",
    "GroupType",
    "LatticeVec",
    "Partition",
    "ResidueProfile",
    "SamplingError",
    "SeriesZ",
    "TheoremId",
    "VerificationReport",
    "beta_set",
    "check_block_det_lemma",
    "classify_core",
    "conjugate",
    "cyclotomic_poly",
    "det",
    "enum_z_asymmetric",
    "enum_z_cores",
    "epsilon",
    "field",
    "frobenius",
    "from_beta_set",
    "gf_z_asymmetric",
    "gf_z_cores",
    "hook_content",
    "is_z_asymmetric",
    "lhs_value",
    "mu_padded",
    "omega_pow",
    "partitions_of",
    "partitions_up_to",
    "phi",
    "phi_inverse",
    "predicted_vanishing",
    "rank",
    "residue_counts",
    "rhs_value",
    "sample_points",
    "sigma_c_sign",
    "sigma_sign",
    "size",
    "t_core",
    "t_core_strips",
    "t_quotient",
    "theta_f",
    "twisted_points",
    "verify",
    "weyl_character",
    "__version__",
]
