//! Riemann zeta and its first two derivatives.
//!
//! The workhorse is Euler–Maclaurin summation; derivatives come from
//! differentiating every term of the formula rather than from finite
//! differences. Left of the critical line the functional equation
//! `zeta(s) = chi(s) zeta(1 - s)` is used, with the exponentially large and
//! small factors of `chi` combined in log space so that large ordinates do
//! not overflow.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::gamma::{digamma, ln_gamma, trigamma, BERNOULLI_EVEN};
use super::EvalParams;
use crate::error::{Error, Result};

/// Value, first and second derivative at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Points closer than this to the origin are summed directly even when
/// `Re s < 1/2`; the reflected argument would sit next to the pole at 1.
const REFLECTION_EXCLUSION: f64 = 0.5;

impl EvalParams {
    /// Truncation point for Euler–Maclaurin at `s`: large enough that the
    /// first omitted Bernoulli term is below ~1e-17 relative.
    pub(crate) fn em_cutoff(&self, s: Complex64) -> usize {
        let m = self.em_bernoulli as f64;
        let reach = (s + 2.0 * m).norm() * 10f64.powf(17.0 / (2.0 * m + 1.0)) / (2.0 * PI);
        (reach.ceil() as usize).max(self.em_terms)
    }

    pub fn zeta(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.jet(s)?.value)
    }

    pub fn zeta_prime(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.jet(s)?.d1)
    }

    pub fn zeta_second(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.jet(s)?.d2)
    }

    /// `zeta`, `zeta'` and `zeta''` at `s` in one pass.
    pub fn jet(&self, s: Complex64) -> Result<ZetaJet> {
        check_finite(s)?;
        if s.re == 1.0 && s.im == 0.0 {
            return Err(Error::PoleAtOne);
        }
        if s.re < 0.5 && s.norm() > REFLECTION_EXCLUSION {
            self.reflected_jet(s)
        } else {
            Ok(self.em_jet(s))
        }
    }

    fn em_jet(&self, s: Complex64) -> ZetaJet {
        let n_cut = self.em_cutoff(s);
        let mut v = Complex64::new(0.0, 0.0);
        let mut d1 = Complex64::new(0.0, 0.0);
        let mut d2 = Complex64::new(0.0, 0.0);
        for n in 1..n_cut {
            let ln_n = (n as f64).ln();
            let term = (-s * ln_n).exp();
            v += term;
            d1 -= term * ln_n;
            d2 += term * (ln_n * ln_n);
        }

        let big_n = n_cut as f64;
        let ln_big_n = big_n.ln();
        let n_pow = (-s * ln_big_n).exp();

        // N^(1-s)/(s-1)
        let u = (s - 1.0).inv();
        let a = n_pow * big_n * u;
        v += a;
        d1 -= a * (ln_big_n + u);
        d2 += a * ((ln_big_n + u) * (ln_big_n + u) + u * u);

        // N^(-s)/2
        let b = n_pow * 0.5;
        v += b;
        d1 -= b * ln_big_n;
        d2 += b * (ln_big_n * ln_big_n);

        // B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
        let (mut p, mut dp, mut ddp) = (s, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        let mut factorial = 2.0;
        let mut n_scale = n_pow / big_n;
        for k in 1..=self.em_bernoulli {
            let c = BERNOULLI_EVEN[k - 1] / factorial;
            let e = n_scale * c;
            v += e * p;
            d1 += e * (dp - p * ln_big_n);
            d2 += e * (ddp - dp * (2.0 * ln_big_n) + p * (ln_big_n * ln_big_n));

            for j in [2 * k - 1, 2 * k] {
                let q = s + j as f64;
                ddp = ddp * q + dp * 2.0;
                dp = dp * q + p;
                p *= q;
            }
            factorial *= ((2 * k + 1) * (2 * k + 2)) as f64;
            n_scale /= big_n * big_n;
        }
        ZetaJet { value: v, d1, d2 }
    }

    fn reflected_jet(&self, s: Complex64) -> Result<ZetaJet> {
        let r = self.em_jet(1.0 - s);
        let w = s * (PI / 2.0);
        let (sin_hat, cos_hat, scale) = scaled_sin_cos(w);
        let one_minus = 1.0 - s;
        // chi(s) = m * sin_hat, with the e^{|Im w|} growth of sin/cos moved into m.
        let m = (ln_gamma(one_minus) + s * LN_2 + (s - 1.0) * LN_PI + scale).exp();
        let a = (2.0 * PI).ln() - digamma(one_minus);
        let a1 = trigamma(one_minus);
        let chi = m * sin_hat;
        let chi1 = m * (a * sin_hat + cos_hat * (PI / 2.0));
        let chi2 = m * ((a * a + a1 - PI * PI / 4.0) * sin_hat + a * cos_hat * PI);
        Ok(ZetaJet {
            value: chi * r.value,
            d1: chi1 * r.value - chi * r.d1,
            d2: chi2 * r.value - chi1 * r.d1 * 2.0 + chi * r.d2,
        })
    }
}

/// `sin w`, `cos w` divided by `e^{|Im w|}`, plus that exponent.
fn scaled_sin_cos(w: Complex64) -> (Complex64, Complex64, f64) {
    let v = w.im.abs();
    let decay = (-2.0 * v).exp();
    let ch = 0.5 * (1.0 + decay);
    let sh = 0.5 * (1.0 - decay) * w.im.signum();
    let (su, cu) = w.re.sin_cos();
    (
        Complex64::new(su * ch, cu * sh),
        Complex64::new(cu * ch, -su * sh),
        v,
    )
}

fn check_finite(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("non-finite argument {s}")))
    }
}

/// Partial sum of the globally convergent Hasse series through outer index
/// `n_max`, divided by `1 - 2^{1-s}`.
pub fn zeta_hasse(s: Complex64, n_max: usize) -> Result<Complex64> {
    check_finite(s)?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::PoleAtOne);
    }
    if n_max == 0 {
        return Err(Error::InvalidParams("n_max must be at least 1".into()));
    }
    let denom = 1.0 - ((1.0 - s) * LN_2).exp();
    if denom.norm() < 1e-13 {
        return Err(Error::DegenerateDenominator { re: s.re, im: s.im });
    }
    let powers: Vec<Complex64> = (0..=n_max)
        .map(|k| (-s * ((k + 1) as f64).ln()).exp())
        .collect();
    // weights[k] = C(n, k) / 2^(n+1), advanced one row of Pascal's triangle per n
    let mut weights = vec![0.0f64; n_max + 1];
    weights[0] = 0.5;
    let mut total = Complex64::new(0.0, 0.0);
    for n in 0..=n_max {
        if n > 0 {
            for k in (1..=n).rev() {
                weights[k] = 0.5 * (weights[k] + weights[k - 1]);
            }
            weights[0] *= 0.5;
        }
        let mut inner = Complex64::new(0.0, 0.0);
        for (k, (w, p)) in weights[..=n].iter().zip(&powers).enumerate() {
            if k % 2 == 0 {
                inner += p * *w;
            } else {
                inner -= p * *w;
            }
        }
        total += inner;
    }
    Ok(total / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_two_closed_form() {
        let p = EvalParams::default();
        let z = p.zeta(c(2.0, 0.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() < 1e-12);
        assert!(z.im.abs() < 1e-15);
    }

    #[test]
    fn zeta_at_zero_and_negative_one() {
        let p = EvalParams::default();
        assert!((p.zeta(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-13);
        assert!((p.zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-13);
        // trivial zero
        assert!(p.zeta(c(-2.0, 0.0)).unwrap().norm() < 1e-14);
    }

    #[test]
    fn pole() {
        let p = EvalParams::default();
        assert!(matches!(p.zeta(c(1.0, 0.0)), Err(Error::PoleAtOne)));
        assert!(matches!(zeta_hasse(c(1.0, 0.0), 10), Err(Error::PoleAtOne)));
    }

    #[test]
    fn hasse_degenerate_denominator() {
        let s = c(1.0, 2.0 * PI / LN_2);
        assert!(matches!(
            zeta_hasse(s, 10),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn hasse_classical_values() {
        let z2 = zeta_hasse(c(2.0, 0.0), 60).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-10);
        let z0 = zeta_hasse(c(0.0, 0.0), 60).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-13);
    }

    #[test]
    fn second_derivative_real_on_axis() {
        let p = EvalParams::default();
        let d2 = p.zeta_second(c(3.0, 0.0)).unwrap();
        assert!(d2.im.abs() < 1e-12);
        let d2 = p.zeta_second(c(-1.5, 0.0)).unwrap();
        assert!(d2.im.abs() < 1e-12);
    }

    #[test]
    fn derivative_at_trivial_zero_is_finite() {
        // zeta'(-2) = -zeta(3)/(4 pi^2)
        let p = EvalParams::default();
        let d = p.zeta_prime(c(-2.0, 0.0)).unwrap();
        let zeta3 = 1.202_056_903_159_594_3;
        assert!((d.re + zeta3 / (4.0 * PI * PI)).abs() < 1e-13);
    }

    #[test]
    fn cutoff_grows_with_height() {
        let p = EvalParams::default();
        assert_eq!(p.em_cutoff(c(2.0, 0.0)), p.em_terms);
        assert!(p.em_cutoff(c(0.5, 1e4)) > 10_000);
    }
}
