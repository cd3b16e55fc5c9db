//! Arithmetic functions rebuilt from zero ordinates.
//!
//! Each reconstruction is `cot(x/2)` times a bracket of zero sums and
//! elementary terms; the `_unscaled` variants return the bracket so the
//! scaling can be inspected separately.

use std::f64::consts::{LN_2, PI, SQRT_2};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::cache::ResidueCache;
use super::identities::{ln_8pi, used_zeros};
use super::params::{IdentityReport, KernelParams, ReportParams, SeriesGrid};
use super::reduce::{tree_sum, Pair};
use crate::arith::{ArithFn, ArithTable};
use crate::error::{Error, Result};
use crate::special::{kernel_cosh_ratio, kernel_sinh_ratio, EvalParams, EULER_GAMMA};
use crate::zeros::ZeroTable;

use num_complex::Complex64;

fn check_t(t: f64) -> Result<()> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::DomainViolation(format!("t = {t} must exceed 1")));
    }
    Ok(())
}

/// `sum_gamma sinh(x gamma)/sinh(pi gamma) cos(gamma log t)`.
pub fn prime_kernel_limit(t: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    let lt = t.ln();
    Ok(tree_sum(used.len(), |j| {
        let g = used[j];
        kernel_sinh_ratio(p.x, g) * (g * lt).cos()
    }))
}

/// Limit of [`prime_kernel_limit`] as `x -> pi` when `t` is not a prime power:
/// `sqrt(t)/2 - 1/(2 (t^2 - 1) sqrt t)`.
pub fn prime_kernel_target(t: f64) -> f64 {
    let s = t.sqrt();
    0.5 * s - 0.5 / ((t * t - 1.0) * s)
}

/// Bracket of the Mangoldt reconstruction, `Lambda(t) ~ cot(x/2) * bracket`.
pub fn mangoldt_reconstruct_unscaled(t: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    let v = prime_kernel_limit(t, p, zeros)?;
    Ok(2.0 * PI * (t - 1.0 / (t * t - 1.0)) - 4.0 * PI * t.sqrt() * v)
}

/// `Lambda(t)` from the first `k_zeros` ordinates at kernel parameter `x`.
pub fn mangoldt_reconstruct(t: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    Ok(p.cot_half() * mangoldt_reconstruct_unscaled(t, p, zeros)?)
}

/// The prime-eliminated identity
/// `sum K (log2/sqrt2 cos(g log t) - Lambda(t)/sqrt t cos(g log 2))` against
/// `log2/sqrt2 (sqrt t/2 - 1/(2(t^2-1) sqrt t)) - Lambda(t)/sqrt t * 5 sqrt2/12`.
pub fn combined_prime_identity(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    arith: &ArithTable,
) -> Result<IdentityReport> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    let lam = arith.at_real(t, ArithFn::Mangoldt)? / t.sqrt();
    let c2 = LN_2 / SQRT_2;
    let (lt, l2) = (t.ln(), LN_2);
    let lhs: f64 = tree_sum(used.len(), |j| {
        let g = used[j];
        kernel_sinh_ratio(p.x, g) * (c2 * (g * lt).cos() - lam * (g * l2).cos())
    });
    let rhs = c2 * prime_kernel_target(t) - lam * 5.0 * SQRT_2 / 12.0;
    Ok(IdentityReport::new(
        "combined_prime_identity",
        lhs,
        rhs,
        ReportParams::Kernel(*p),
    )
    .with_notes(format!("t = {t}, x = {}; {} zeros", p.x, used.len()))
    .detail("t", t))
}

/// `sum_{j < K} cos(gamma_{j+1} log t) z^j`.
pub fn abel_limit_series(t: f64, z_abel: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    if !(0.0..1.0).contains(&z_abel) {
        return Err(Error::DomainViolation(format!(
            "z = {z_abel} must lie in [0, 1)"
        )));
    }
    let used = used_zeros(zeros, p);
    Ok(weighted_cos_sum(used, t, z_abel))
}

/// `sum_{j=0}^{N} cos(gamma_{j+1} log t) (1 - log N/N)^j` with `N + 1` the
/// number of zeros used. Exploratory: reported, never asserted.
pub fn conjecture_series(t: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    if used.len() < 3 {
        return Err(Error::InvalidParams("need at least 3 zeros".into()));
    }
    let n = (used.len() - 1) as f64;
    Ok(weighted_cos_sum(used, t, 1.0 - n.ln() / n))
}

fn weighted_cos_sum(used: &[f64], t: f64, w: f64) -> f64 {
    let lt = t.ln();
    let lw = w.ln();
    tree_sum(used.len(), |j| {
        let weight = if j == 0 { 1.0 } else { (j as f64 * lw).exp() };
        (used[j] * lt).cos() * weight
    })
}

/// Smooth part of the staircase:
/// `sqrt t - 1/sqrt t - atan((sqrt t-1)/(sqrt t+1))/2 - log((sqrt t-1)/(sqrt t+1))/4 - (log 8 pi + C)/4`.
pub fn staircase_f(t: f64) -> f64 {
    let s = t.sqrt();
    let q = (s - 1.0) / (s + 1.0);
    s - 1.0 / s - 0.5 * q.atan() - 0.25 * q.ln() - 0.25 * (ln_8pi() + EULER_GAMMA)
}

/// `F(t) - sum sin(gamma log t)/gamma`.
pub fn staircase_lhs(t: f64, p: &KernelParams, zeros: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    let lt = t.ln();
    let s: f64 = tree_sum(used.len(), |j| (used[j] * lt).sin() / used[j]);
    Ok(staircase_f(t) - s)
}

/// `Lambda(t)/(4 sqrt t) + sum_{n<t} Lambda(n)/(2 sqrt n)`.
pub fn staircase_rhs(t: f64, arith: &ArithTable) -> Result<f64> {
    check_t(t)?;
    Ok(
        0.25 * arith.at_real(t, ArithFn::Mangoldt)? / t.sqrt()
            + 0.5 * arith.weighted_psi_sqrt(t)?,
    )
}

pub fn staircase(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    arith: &ArithTable,
) -> Result<IdentityReport> {
    let lhs = staircase_lhs(t, p, zeros)?;
    let rhs = staircase_rhs(t, arith)?;
    Ok(
        IdentityReport::new("staircase", lhs, rhs, ReportParams::Kernel(*p))
            .with_notes(format!("t = {t}; {} zeros", used_zeros(zeros, p).len()))
            .detail("t", t),
    )
}

/// Landau's sharp-cutoff formula `-(2 pi/T) sqrt t sum_{gamma <= T} cos(gamma log t)`.
pub fn landau_mangoldt(t: f64, t_cut: f64, zeros: &ZeroTable) -> Result<f64> {
    check_t(t)?;
    let k = zeros.count_below(t_cut)?;
    let used = zeros.head(k);
    let lt = t.ln();
    let s: f64 = tree_sum(used.len(), |j| (used[j] * lt).cos());
    Ok(-2.0 * PI / t_cut * t.sqrt() * s)
}

/// `sum_gamma [Re(c_gamma) K_sinh cos(gamma log t) - Im(c_gamma) K_cosh sin(gamma log t)]`.
fn residue_sum(used: &[f64], coeffs: &[Complex64], x: f64, t: f64) -> f64 {
    let lt = t.ln();
    let Pair(a, b) = tree_sum(used.len(), |j| {
        let g = used[j];
        let (s, c) = (g * lt).sin_cos();
        Pair(
            coeffs[j].re * kernel_sinh_ratio(x, g) * c,
            coeffs[j].im * kernel_cosh_ratio(x, g) * s,
        )
    });
    a - b
}

const TAIL_TERMS: usize = 60;

/// `(-1)^n (2 pi)^{2n} / ((2n)! zeta(2n+1))` for `n = 1..=60` (index 0 unused).
fn moebius_coefficients() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        let eval = EvalParams::default();
        let mut out = vec![0.0; TAIL_TERMS + 1];
        let mut ratio = 1.0; // (2 pi)^{2n}/(2n)!
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            let nf = n as f64;
            ratio *= 4.0 * PI * PI / ((2.0 * nf - 1.0) * (2.0 * nf));
            let z = zeta_real(&eval, 2 * n + 1);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            *slot = sign * ratio / z;
        }
        out
    })
}

fn zeta_real(eval: &EvalParams, k: usize) -> f64 {
    if k > 120 {
        return 1.0 + (-(k as f64) * LN_2).exp();
    }
    eval.zeta(Complex64::new(k as f64, 0.0))
        .expect("integer arguments above 1 are regular")
        .re
}

/// `sum_{n>=1} (-1)^n (2 pi)^{2n}/((2n)! zeta(2n+1)) t^{-2n}`.
pub fn moebius_tail_series(t: f64) -> f64 {
    let c = moebius_coefficients();
    let u = 1.0 / (t * t);
    let mut pow = 1.0;
    let mut acc = 0.0;
    for &cn in &c[1..] {
        pow *= u;
        acc += cn * pow;
    }
    acc
}

/// `(2n+1) zeta(2n+2)/zeta(2n+1)`.
pub fn phi_tail_coefficient(n: usize) -> f64 {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    let table = C.get_or_init(|| {
        let eval = EvalParams::default();
        (0..=64)
            .map(|n| {
                if n == 0 {
                    0.0
                } else {
                    (2 * n + 1) as f64 * zeta_real(&eval, 2 * n + 2) / zeta_real(&eval, 2 * n + 1)
                }
            })
            .collect()
    });
    if n < table.len() {
        table[n]
    } else {
        // zeta(k+1)/zeta(k) = 1 - 2^{-k-1} + O(3^{-k})
        (2 * n + 1) as f64 * (1.0 - (-((2 * n + 2) as f64) * LN_2).exp())
    }
}

/// `sum_{n>=1} (2n+1) zeta(2n+2)/zeta(2n+1) t^{-2n}`; converges for `t > 1`.
pub fn phi_tail_series(t: f64) -> f64 {
    let u = 1.0 / (t * t);
    let mut pow = 1.0;
    let mut acc = 0.0;
    for n in 1..1_000_000 {
        pow *= u;
        let term = phi_tail_coefficient(n) * pow;
        acc += term;
        if term < 1e-18 * acc {
            break;
        }
    }
    acc
}

pub fn moebius_reconstruct_unscaled(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    cache: &ResidueCache,
) -> Result<f64> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    let r = cache.get(zeros, used.len())?;
    r.check_simple(used.len())?;
    let s = residue_sum(used, &r.inv_deriv, p.x, t);
    Ok(4.0 * PI * t.sqrt() * s + 4.0 * PI * moebius_tail_series(t))
}

/// `mu(t)` from the zeros and `1/zeta'(1/2 + i gamma)`.
pub fn moebius_reconstruct(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    cache: &ResidueCache,
) -> Result<f64> {
    Ok(p.cot_half() * moebius_reconstruct_unscaled(t, p, zeros, cache)?)
}

pub fn phi_reconstruct_unscaled(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    cache: &ResidueCache,
) -> Result<f64> {
    check_t(t)?;
    let used = used_zeros(zeros, p);
    let r = cache.get(zeros, used.len())?;
    r.check_simple(used.len())?;
    let s = residue_sum(used, &r.phi_ratio, p.x, t);
    Ok(4.0 * PI * t.sqrt() * s + 12.0 / PI * t * t - 2.0 / PI * phi_tail_series(t))
}

/// `phi(t)` from the zeros and `zeta(-1/2 + i gamma)/zeta'(1/2 + i gamma)`.
pub fn phi_reconstruct(
    t: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    cache: &ResidueCache,
) -> Result<f64> {
    Ok(p.cot_half() * phi_reconstruct_unscaled(t, p, zeros, cache)?)
}

/// What [`emit_grid`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Mangoldt,
    Moebius,
    Phi,
    Staircase,
}

impl std::str::FromStr for GridKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mangoldt" => Ok(GridKind::Mangoldt),
            "moebius" | "mobius" => Ok(GridKind::Moebius),
            "phi" => Ok(GridKind::Phi),
            "staircase" => Ok(GridKind::Staircase),
            _ => Err(Error::InvalidParams(format!("unknown grid kind '{s}'"))),
        }
    }
}

/// Grid `t_min, t_min + step, ...` up to `t_max` (inclusive up to rounding),
/// with points `t <= 1` dropped.
pub fn grid_points(t_min: f64, t_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidParams(format!(
            "step = {step} must be positive"
        )));
    }
    if !t_min.is_finite() || !t_max.is_finite() {
        return Err(Error::InvalidParams("grid bounds must be finite".into()));
    }
    if t_max < t_min {
        return Ok(Vec::new());
    }
    let n = ((t_max - t_min) / step + 1e-9).floor() as usize;
    Ok((0..=n)
        .map(|i| t_min + i as f64 * step)
        .filter(|&t| t > 1.0)
        .collect())
}

/// Samples a reconstruction (or the staircase) next to its ground truth.
#[allow(clippy::too_many_arguments)]
pub fn emit_grid(
    which: GridKind,
    t_min: f64,
    t_max: f64,
    step: f64,
    p: &KernelParams,
    zeros: &ZeroTable,
    arith: &ArithTable,
    cache: &ResidueCache,
) -> Result<SeriesGrid> {
    let ts = grid_points(t_min, t_max, step)?;
    let mut grid = SeriesGrid::default();
    if let Some(&last) = ts.last() {
        if last > arith.n_max() as f64 {
            return Err(Error::OutOfRange {
                what: "t_max",
                value: last,
                limit: arith.n_max() as f64,
            });
        }
    }
    for t in ts {
        let (v, r) = match which {
            GridKind::Mangoldt => (
                mangoldt_reconstruct(t, p, zeros)?,
                arith.at_real(t, ArithFn::Mangoldt)?,
            ),
            GridKind::Moebius => (
                moebius_reconstruct(t, p, zeros, cache)?,
                arith.at_real(t, ArithFn::Moebius)?,
            ),
            GridKind::Phi => (
                phi_reconstruct(t, p, zeros, cache)?,
                arith.at_real(t, ArithFn::Phi)?,
            ),
            GridKind::Staircase => (staircase_lhs(t, p, zeros)?, staircase_rhs(t, arith)?),
        };
        grid.push(t, v, r);
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_row_count() {
        assert_eq!(grid_points(2.0, 26.0, 0.05).unwrap().len(), 481);
        assert!(grid_points(5.0, 2.0, 0.1).unwrap().is_empty());
        assert_eq!(grid_points(1.0, 2.0, 0.5).unwrap(), vec![1.5, 2.0]);
        assert!(grid_points(1.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn moebius_tail_at_ten() {
        let v = moebius_tail_series(10.0);
        let first = moebius_coefficients()[1] / 100.0;
        let zeta3 = 1.202_056_903_159_594_3;
        assert!((first + 4.0 * PI * PI / (2.0 * zeta3) / 100.0).abs() < 1e-13);
        assert!(v.abs() < 0.2);
        assert!((v - first).abs() < first.abs() * 0.2);
    }

    #[test]
    fn phi_tail_first_coefficient() {
        // 3 zeta(4)/zeta(3)
        assert!((phi_tail_coefficient(1) - 2.701_178_032_919_064).abs() < 1e-12);
        assert!((phi_tail_coefficient(100) - 201.0).abs() < 1e-12);
    }

    #[test]
    fn staircase_rhs_at_two() {
        let a = ArithTable::build(100).unwrap();
        let v = staircase_rhs(2.0, &a).unwrap();
        assert!((v - 0.25 * LN_2 / SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn domain() {
        let z = ZeroTable::from_ordinates(vec![14.134725142], 9).unwrap();
        let p = KernelParams::default();
        assert!(matches!(
            mangoldt_reconstruct(1.0, &p, &z),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            landau_mangoldt(4.0, 20.0, &z),
            Err(Error::OutOfRange { .. })
        ));
    }
}
