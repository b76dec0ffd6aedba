"""Analytic and exact transform layer for the Askey-Wimp-Kerov family."""

from .analytic import (
    ContinuationError,
    F_eval,
    FTrajectoryReport,
    G_eval,
    PoleError,
    PrecisionError,
    RiccatiResiduals,
    cf_eval,
    decomposition_residual,
    density_eval,
    dilation_residual,
    f_trajectory,
    riccati_residual,
    voiculescu_phi,
)
from .fid import (
    HANKEL_ORDINAL_OFFSET,
    FidReport,
    OdeCheckResult,
    fid_test,
    formal_phi_ode_check,
    free_cumulants_of_mu_c,
    shifted_sequence_of_mu_c,
)
from .jacobi import (
    JacobiFit,
    JacobiParams,
    hankel_sign,
    hankel_sign_from_pivots,
    jacobi_from_moments,
    moments_from_jacobi,
    mu_c_jacobi,
)

__all__ = [
    "ContinuationError",
    "F_eval",
    "FTrajectoryReport",
    "FidReport",
    "G_eval",
    "HANKEL_ORDINAL_OFFSET",
    "JacobiFit",
    "JacobiParams",
    "OdeCheckResult",
    "PoleError",
    "PrecisionError",
    "RiccatiResiduals",
    "cf_eval",
    "decomposition_residual",
    "density_eval",
    "dilation_residual",
    "f_trajectory",
    "fid_test",
    "formal_phi_ode_check",
    "free_cumulants_of_mu_c",
    "hankel_sign",
    "hankel_sign_from_pivots",
    "jacobi_from_moments",
    "moments_from_jacobi",
    "mu_c_jacobi",
    "riccati_residual",
    "shifted_sequence_of_mu_c",
    "voiculescu_phi",
]
