//! Identities, constants, expansions and reconstructions built on sums over
//! zeta zeros.
//!
//! Zero sums always go through the stable kernels of [`crate::special`] and
//! the deterministic reduction in [`reduce`], so results do not depend on the
//! number of worker threads.

pub mod cache;
pub mod cramer;
pub mod identities;
pub mod lambda_sums;
pub mod params;
pub mod quadrature;
pub mod reconstruct;
pub mod reduce;

pub use cache::{ResidueCache, Residues, CACHE_DIR_ENV};
pub use cramer::{constant_a, constants, cramer_expansion, cramer_expansion_residual};
pub use identities::{
    catalan_identity_residual, catalan_quadratures, derivative_identity_residual, h_func,
    h_near_one, h_total, integrated_identity_residual, limit_pi_check, logderiv_half_closed_form,
    logderiv_half_numeric, logderiv_half_report, main_identity_residual, rh_inequality_margin,
    tau_square_sum, trig_f, trig_g, trig_identity_residual, Companion,
};
pub use params::{Constants, IdentityReport, KernelParams, ReportParams, Scalar, SeriesGrid};
pub use reconstruct::{
    abel_limit_series, combined_prime_identity, conjecture_series, emit_grid, landau_mangoldt,
    mangoldt_reconstruct, moebius_reconstruct, phi_reconstruct, prime_kernel_limit,
    prime_kernel_target, staircase, GridKind,
};
