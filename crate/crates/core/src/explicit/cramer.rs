//! The constant `A` and the expansions of `sum gamma^k e^{-gamma/T}`.

use std::f64::consts::{LN_2, PI};

use super::identities::used_zeros;
use super::lambda_sums::{halfint_sum, HALFINT_MAX};
use super::params::{Constants, IdentityReport, KernelParams, ReportParams};
use super::reduce::tree_sum;
use crate::error::{Error, Result};
use crate::special::{exp_over_sinh_pi, CATALAN, EULER_GAMMA};
use crate::zeros::ZeroTable;

use num_complex::Complex64;

/// `e^{-gamma_K/T}` must be below this for the truncated sum to be trusted.
pub const CRAMER_TAIL_BOUND: f64 = 1e-12;

/// `A = 1/16 + (4C - 1 + 16 log 2 + 4 log pi)/(96 pi)
///      + (1/pi) sum n zeta'/zeta(n + 1/2) + sum gamma e^{-pi gamma}/sinh(pi gamma)`.
pub fn constant_a(p: &KernelParams, zeros: &ZeroTable) -> f64 {
    let (series, zero_part) = constant_a_parts(p, zeros);
    1.0 / 16.0
        + (4.0 * EULER_GAMMA - 1.0 + 16.0 * LN_2 + 4.0 * PI.ln()) / (96.0 * PI)
        + series / PI
        + zero_part
}

/// The `n`-series and the zero sum entering `A`, separately.
pub fn constant_a_parts(p: &KernelParams, zeros: &ZeroTable) -> (f64, f64) {
    let used = used_zeros(zeros, p);
    let series = halfint_sum(p.n_terms, |n, l| Complex64::new(n as f64 * l, 0.0)).re;
    let zero_part: f64 = tree_sum(used.len(), |j| used[j] * exp_over_sinh_pi(used[j]));
    (series, zero_part)
}

pub fn constants(p: &KernelParams, zeros: &ZeroTable) -> Constants {
    Constants {
        euler_c: EULER_GAMMA,
        catalan_g: CATALAN,
        constant_a: constant_a(p, zeros),
    }
}

/// Expansion of `sum gamma^order e^{-gamma/T}` through the printed terms.
pub fn cramer_expansion(t: f64, order: u8, a: f64) -> Result<f64> {
    let c = EULER_GAMMA;
    let l2p = (2.0 * PI).ln();
    let lt = t.ln();
    Ok(match order {
        0 => {
            t * lt / (2.0 * PI) - (c + l2p) / (2.0 * PI) * t
                + 7.0 / 8.0
                + lt / (48.0 * PI * t)
                + a / t
                - 9.0 / (64.0 * t * t)
                + 7.0 / (11520.0 * PI) * lt / t.powi(3)
        }
        1 => {
            t * t * lt / (2.0 * PI) + (1.0 - c - l2p) / (2.0 * PI) * t * t - lt / (48.0 * PI)
                + (1.0 / (48.0 * PI) - a)
                + 9.0 / (32.0 * t)
        }
        2 => {
            t.powi(3) * lt / PI + (3.0 - 2.0 * c - 2.0 * l2p) / (2.0 * PI) * t.powi(3)
                - t / (48.0 * PI)
                - 9.0 / 32.0
        }
        _ => {
            return Err(Error::InvalidParams(format!(
                "expansion order {order} not in 0..=2"
            )))
        }
    })
}

/// Size of the first omitted term of the expansion at each order.
fn remainder_scale(t: f64, order: u8) -> f64 {
    match order {
        0 => t.ln() / t.powi(3),
        1 => 1.0 / (t * t),
        _ => 1.0 / t,
    }
}

/// `sum gamma^order e^{-gamma/T}` over the table against the expansion.
pub fn cramer_expansion_residual(
    t: f64,
    order: u8,
    p: &KernelParams,
    zeros: &ZeroTable,
) -> Result<IdentityReport> {
    if !(t >= 10.0) || !t.is_finite() {
        return Err(Error::Domain(format!("T = {t} must be at least 10")));
    }
    let used = used_zeros(zeros, p);
    let last = *used.last().expect("table is never empty");
    if (-last / t).exp() >= CRAMER_TAIL_BOUND {
        return Err(Error::InsufficientZeros {
            needed: -t * CRAMER_TAIL_BOUND.ln(),
            available: last,
        });
    }
    let k = order as i32;
    let head: f64 = tree_sum(used.len(), |j| used[j].powi(k) * (-used[j] / t).exp());
    // leading term of int_last^inf g^k e^{-g/T} log(g/2pi)/(2pi) dg
    let tail = t * last.powi(k) * (-last / t).exp() * (last / (2.0 * PI)).ln() / (2.0 * PI);
    let a = constant_a(p, zeros);
    let rhs = cramer_expansion(t, order, a)?;
    Ok(IdentityReport::new(
        format!("cramer_expansion_order{order}"),
        head + tail,
        rhs,
        ReportParams::Kernel(*p),
    )
    .with_notes(format!(
        "T = {t}; {} zeros up to {last:.6}; {} half-integer terms in A",
        used.len(),
        p.n_terms.min(HALFINT_MAX)
    ))
    .detail("T", t)
    .detail("tail", tail)
    .detail("constant_a", a)
    .detail("remainder_scale", remainder_scale(t, order)))
}
