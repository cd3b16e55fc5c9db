//! Numerical verification of explicit formulas linking sums over the
//! non-trivial zeros of the Riemann zeta function to the Mangoldt, Moebius
//! and Euler-phi functions, and reconstruction of those functions from zero
//! ordinates alone.
//!
//! The crate is organised bottom-up:
//!
//! * [`zeros`] loads and validates tables of zero ordinates.
//! * [`special`] evaluates `zeta`, its derivatives, gamma-type functions and
//!   the overflow-free hyperbolic kernels.
//! * [`arith`] sieves `Lambda`, `mu`, `phi` and their partial sums.
//! * [`explicit`] holds every identity, constant and reconstruction.
//! * [`cli`] is the command-line front end used by the `zeta-explicit` binary.
//!
//! Everything runs in double precision and works on the critical line: a
//! zero table stores only ordinates.

// `!(a > b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// 3.14 is the default kernel parameter, not a stand-in for pi.
#![allow(clippy::approx_constant)]

pub mod arith;
pub mod cli;
pub mod error;
pub mod explicit;
pub mod special;
pub mod zeros;

pub use arith::{ArithFn, ArithTable};
pub use error::{Error, Result};
pub use explicit::{IdentityReport, KernelParams, SeriesGrid};
pub use special::EvalParams;
pub use zeros::{load_zeros, parse_zeros, ZeroTable};
