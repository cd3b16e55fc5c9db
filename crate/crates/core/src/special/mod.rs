//! Zeta-function machinery and the stable kernels every zero sum runs on.

mod gamma;
mod kernel;
mod zeta;

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use gamma::{digamma, gamma, ln_gamma, trigamma};
pub use kernel::{
    exp_over_sinh_pi, inv_sinh_pi, kernel_cosh_minus_one_complex, kernel_cosh_minus_one_ratio,
    kernel_cosh_ratio, kernel_sinh_ratio, kernel_sinh_ratio_complex,
};
pub use zeta::{zeta_hasse, ZetaJet};

use crate::arith::mangoldt_dirichlet_tail;
use crate::error::{Error, Result};

/// A point of the complex plane; every evaluator rejects non-finite parts.
pub type ComplexPoint = Complex64;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Catalan's constant.
pub const CATALAN: f64 = 0.915_965_594_177_219;

/// Tuning for the Euler–Maclaurin evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalParams {
    /// Minimum number of directly summed terms `N`; raised automatically
    /// with `|s|`.
    pub em_terms: usize,
    /// Number of Bernoulli correction terms.
    pub em_bernoulli: usize,
    /// Step for finite-difference validation of the derivatives.
    pub fd_step: f64,
}

impl Default for EvalParams {
    fn default() -> Self {
        Self {
            em_terms: 50,
            em_bernoulli: 8,
            fd_step: 1e-4,
        }
    }
}

impl EvalParams {
    pub fn new(em_terms: usize, em_bernoulli: usize, fd_step: f64) -> Result<Self> {
        let p = Self {
            em_terms,
            em_bernoulli,
            fd_step,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.em_terms < 10 {
            return Err(Error::InvalidParams(format!(
                "em_terms = {} must be at least 10",
                self.em_terms
            )));
        }
        if !(2..=12).contains(&self.em_bernoulli) {
            return Err(Error::InvalidParams(format!(
                "em_bernoulli = {} must lie in [2, 12]",
                self.em_bernoulli
            )));
        }
        if !(self.fd_step > 0.0 && self.fd_step <= 1e-4) {
            return Err(Error::InvalidParams(format!(
                "fd_step = {} must lie in (0, 1e-4]",
                self.fd_step
            )));
        }
        Ok(())
    }

    /// `zeta'(s)` by central difference of the evaluator, for validation.
    pub fn zeta_prime_fd(&self, s: Complex64) -> Result<Complex64> {
        let h = self.fd_step;
        Ok((self.zeta(s + h)? - self.zeta(s - h)?) / (2.0 * h))
    }

    /// `zeta''(s)` by second central difference, for validation.
    pub fn zeta_second_fd(&self, s: Complex64) -> Result<Complex64> {
        let h = self.fd_step;
        Ok((self.zeta(s + h)? - self.zeta(s)? * 2.0 + self.zeta(s - h)?) / (h * h))
    }
}

/// `zeta(s)` with default parameters.
pub fn zeta_em(s: Complex64) -> Result<Complex64> {
    EvalParams::default().zeta(s)
}

/// `zeta'(s)` with default parameters.
pub fn zeta_prime(s: Complex64) -> Result<Complex64> {
    EvalParams::default().zeta_prime(s)
}

/// `zeta''(s)` with default parameters.
pub fn zeta_second(s: Complex64) -> Result<Complex64> {
    EvalParams::default().zeta_second(s)
}

/// Riemann–Siegel theta through the `T^-5` term of its asymptotic series.
pub fn theta_rs(t: f64) -> Result<f64> {
    if !(t >= 10.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "theta series needs T >= 10, got {t}"
        )));
    }
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    Ok(0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0))))
}

/// `psi(1/2 + n) = 2 (1 + 1/3 + ... + 1/(2n-1)) - C - 2 log 2`.
pub fn digamma_half(n: u32) -> f64 {
    let h: f64 = (1..=n).map(|j| 1.0 / (2.0 * j as f64 - 1.0)).sum();
    2.0 * h - EULER_GAMMA - 2.0 * LN_2
}

/// Below this order the Dirichlet series for `zeta'/zeta(n + 1/2)` would need
/// primes far past any practical sieve, so the Euler–Maclaurin evaluator is
/// used instead.
const DIRICHLET_MIN_ORDER: u32 = 9;

/// `zeta'(n + 1/2) / zeta(n + 1/2)`.
///
/// Orders from [`DIRICHLET_MIN_ORDER`] up use `-sum Lambda(m) m^{-(n+1/2)}`,
/// summed until the terms drop below 1e-17 of the leading `log 2 / 2^{n+1/2}`;
/// lower orders go through the Euler–Maclaurin evaluator.
pub fn logderiv_halfint(n: u32) -> f64 {
    let s = n as f64 + 0.5;
    if n >= 200 {
        // 7^{-s} is below 1e-70 of the leading term
        return -(LN_2 * (-s * LN_2).exp()
            + 3f64.ln() * (-s * 3f64.ln()).exp()
            + LN_2 * (-s * 4f64.ln()).exp()
            + 5f64.ln() * (-s * 5f64.ln()).exp());
    }
    if n >= DIRICHLET_MIN_ORDER {
        let eps = 1e-17 * LN_2 * (-s * LN_2).exp();
        return -mangoldt_dirichlet_tail(s, eps).expect("s > 1");
    }
    let jet = EvalParams::default()
        .jet(Complex64::new(s, 0.0))
        .expect("half-integers are regular points");
    jet.d1.re / jet.value.re
}

/// `zeta'(n + 1/2)/zeta(n + 1/2)` for `n = 1..=count`, index 0 unused.
pub fn logderiv_halfint_table(count: u32) -> Vec<f64> {
    let mut v = Vec::with_capacity(count as usize + 1);
    v.push(f64::NAN);
    v.extend((1..=count).map(logderiv_halfint));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(EvalParams::new(9, 8, 1e-5).is_err());
        assert!(EvalParams::new(50, 1, 1e-5).is_err());
        assert!(EvalParams::new(50, 13, 1e-5).is_err());
        assert!(EvalParams::new(50, 8, 1e-3).is_err());
        assert!(EvalParams::new(50, 8, 0.0).is_err());
        assert!(EvalParams::new(50, 12, 1e-4).is_ok());
    }

    #[test]
    fn theta_domain() {
        assert!(matches!(theta_rs(5.0), Err(Error::Domain(_))));
        assert!(theta_rs(f64::NAN).is_err());
        assert!(theta_rs(10.0).is_ok());
    }

    #[test]
    fn theta_at_hundred() {
        // mpmath siegeltheta(100)
        assert!((theta_rs(100.0).unwrap() - 87.972_165_231_787_22).abs() < 1e-10);
    }

    #[test]
    fn theta_error_shrinks_with_height() {
        // mpmath siegeltheta; relative error, since at T = 1000 the absolute
        // error is already at the ulp of theta
        let rel = |t: f64, exact: f64| ((theta_rs(t).unwrap() - exact) / exact).abs();
        let low = rel(10.0, -3.067_074_396_289_895_3);
        let high = rel(1000.0, 2_034.546_428_038_031_6);
        assert!(low > 1e-12 && low < 1e-11, "{low}");
        assert!(high < low * 1e-4, "{high} vs {low}");
    }

    #[test]
    fn digamma_half_values() {
        assert!((digamma_half(0) + 1.963_510_026_021_423_5).abs() < 1e-15);
        assert!((digamma_half(1) - (2.0 - EULER_GAMMA - 2.0 * LN_2)).abs() < 1e-15);
    }

    #[test]
    fn digamma_half_matches_recurrence() {
        // psi(x + 1) = psi(x) + 1/x from psi(1/2)
        let mut psi = -EULER_GAMMA - 2.0 * LN_2;
        for k in 0..5 {
            psi += 1.0 / (k as f64 + 0.5);
        }
        assert!((digamma_half(5) - psi).abs() < 1e-14);
    }

    #[test]
    fn logderiv_switch_is_seamless() {
        // Both routes at the switch order agree.
        let s = DIRICHLET_MIN_ORDER as f64 + 0.5;
        let jet = EvalParams::default().jet(Complex64::new(s, 0.0)).unwrap();
        let em = jet.d1.re / jet.value.re;
        assert!((em - logderiv_halfint(DIRICHLET_MIN_ORDER)).abs() < 1e-16);
    }
}
