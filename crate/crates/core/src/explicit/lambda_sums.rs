//! Mangoldt-weighted series with prime-number-theorem tail corrections, and
//! the series over `zeta'/zeta(n + 1/2)`.
//!
//! For a smooth `g`, `sum_{n > N} Lambda(n) g(n)` is replaced by
//! `int_N^inf g(u) du - g(N) (psi(N) - N + log 2 pi)`, i.e. `psi(u)` beyond
//! the table is approximated by its smooth part `u - log 2 pi`. What remains
//! is the oscillating zero contribution, `O(N^{-1})` for the kernels used here.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::reduce::tree_sum;
use crate::arith::ArithTable;
use crate::error::{Error, Result};
use crate::special::logderiv_halfint;

/// Highest order kept in the `zeta'/zeta(n + 1/2)` table; beyond it the
/// values are below `2^{-2000}`.
pub const HALFINT_MAX: usize = 2000;

fn ln_2pi() -> f64 {
    (2.0 * PI).ln()
}

fn check_terms(arith: &ArithTable, n_terms: usize) -> Result<()> {
    if n_terms > arith.n_max() {
        return Err(Error::OutOfRange {
            what: "n_terms",
            value: n_terms as f64,
            limit: arith.n_max() as f64,
        });
    }
    if n_terms < 2 {
        return Err(Error::InvalidParams("n_terms must be at least 2".into()));
    }
    Ok(())
}

/// `psi(N) - N + log 2 pi`, the boundary factor of every tail.
fn psi_excess(arith: &ArithTable, n: usize) -> f64 {
    arith.psi_at(n) - n as f64 + ln_2pi()
}

/// `atan(w)/w` as a function of `w^2`.
fn atan_ratio(w2: Complex64) -> Complex64 {
    if w2.norm() < 0.25 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut acc = term;
        let mut k = 1.0;
        while term.norm() > 1e-18 {
            term *= -w2;
            acc += term / (2.0 * k + 1.0);
            k += 1.0;
        }
        acc
    } else {
        let w = w2.sqrt();
        w.atan() / w
    }
}

/// `sum_{n >= 1} Lambda(n) / (sqrt(n) (n + a))`, summed to `n_terms` plus
/// the tail.
///
/// `a` must stay off the ray `(-inf, 0]` beyond the summed range.
pub fn stieltjes_sum(arith: &ArithTable, n_terms: usize, a: Complex64) -> Result<Complex64> {
    check_terms(arith, n_terms)?;
    if a.im == 0.0 && a.re <= -(n_terms as f64) {
        return Err(Error::DomainViolation(format!(
            "pole of 1/(n + a) beyond the summed range at a = {a}"
        )));
    }
    let lam = arith.mangoldt_slice();
    let head: Complex64 = tree_sum(n_terms, |i| {
        let n = i + 1;
        let l = lam[n];
        if l == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            let nf = n as f64;
            l / (nf.sqrt() * (a + nf))
        }
    });
    let nf = n_terms as f64;
    let integral = atan_ratio(a / nf) * (2.0 / nf.sqrt());
    let boundary = psi_excess(arith, n_terms) / (nf.sqrt() * (a + nf));
    Ok(head + integral - boundary)
}

/// `sum_{n >= 1} Lambda(n)/sqrt(n) * log((a + n)/(1 + n))`, with tail.
pub fn log_ratio_sum(arith: &ArithTable, n_terms: usize, a: Complex64) -> Result<Complex64> {
    check_terms(arith, n_terms)?;
    let nf = n_terms as f64;
    if a.norm() > 0.5 * nf {
        return Err(Error::DomainViolation(format!(
            "|a| = {} too large for the tail expansion at N = {n_terms}",
            a.norm()
        )));
    }
    let lam = arith.mangoldt_slice();
    let head: Complex64 = tree_sum(n_terms, |i| {
        let n = i + 1;
        let l = lam[n];
        if l == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            let x = n as f64;
            l / x.sqrt() * ((a + x) / (1.0 + x)).ln()
        }
    });
    // log((a + u)/(1 + u)) = sum_k (-1)^{k+1} (a^k - 1)/(k u^k)
    let mut integral = Complex64::new(0.0, 0.0);
    let mut a_pow = Complex64::new(1.0, 0.0);
    let mut n_pow = nf.sqrt();
    for k in 1..200 {
        a_pow *= a;
        n_pow /= nf;
        let kf = k as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = (a_pow - 1.0) * (sign * n_pow / (kf * (kf - 0.5)));
        integral += term;
        if term.norm() < 1e-22 {
            break;
        }
    }
    let boundary = psi_excess(arith, n_terms) / nf.sqrt() * ((a + nf) / (1.0 + nf)).ln();
    Ok(head + integral - boundary)
}

/// `zeta'(n + 1/2)/zeta(n + 1/2)` for `n = 0..=HALFINT_MAX` (index 0 unused).
pub fn halfint_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = vec![f64::NAN; HALFINT_MAX + 1];
        for (n, slot) in v.iter_mut().enumerate().skip(1) {
            *slot = logderiv_halfint(n as u32);
        }
        v
    })
}

/// `sum_{n=1}^{min(n_terms, HALFINT_MAX)} f(n, zeta'/zeta(n + 1/2))`.
pub fn halfint_sum<F>(n_terms: usize, f: F) -> Complex64
where
    F: Fn(usize, f64) -> Complex64,
{
    let table = halfint_table();
    let top = n_terms.min(HALFINT_MAX);
    (1..=top).map(|n| f(n, table[n])).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> ArithTable {
        ArithTable::build(200_000).unwrap()
    }

    #[test]
    fn tail_makes_truncation_insensitive() {
        let t = table();
        let a = Complex64::new(2.0, 0.0);
        let s1 = stieltjes_sum(&t, 50_000, a).unwrap();
        let s2 = stieltjes_sum(&t, 200_000, a).unwrap();
        assert!((s1 - s2).norm() < 1e-6, "{}", (s1 - s2).norm());
        let naive: f64 = (1..=50_000)
            .map(|n| t.mangoldt(n) / ((n as f64).sqrt() * (n as f64 + 2.0)))
            .sum();
        assert!((naive - s2.re).abs() > 1e-3);
    }

    #[test]
    fn log_ratio_tail() {
        let t = table();
        let a = Complex64::from_polar(1.0, 1.2);
        let s1 = log_ratio_sum(&t, 50_000, a).unwrap();
        let s2 = log_ratio_sum(&t, 200_000, a).unwrap();
        assert!((s1 - s2).norm() < 1e-6, "{}", (s1 - s2).norm());
        assert_eq!(
            log_ratio_sum(&t, 1000, Complex64::new(1.0, 0.0)).unwrap(),
            0.0.into()
        );
    }

    #[test]
    fn atan_ratio_branches_agree() {
        for w2 in [Complex64::new(0.2, 0.1), Complex64::new(-0.24, 0.0)] {
            let w = w2.sqrt();
            assert!((atan_ratio(w2) - w.atan() / w).norm() < 1e-15);
        }
    }

    #[test]
    fn terms_beyond_table_rejected() {
        let t = ArithTable::build(100).unwrap();
        assert!(matches!(
            stieltjes_sum(&t, 101, Complex64::new(1.0, 0.0)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn halfint_values_decay_like_two_to_minus_n() {
        let v = halfint_table();
        let lead = std::f64::consts::LN_2 / 2f64.sqrt();
        assert!((v[40].abs() * 2f64.powi(40) - lead).abs() < 1e-6);
        assert!(v[1] < 0.0 && v[HALFINT_MAX] <= 0.0);
    }
}
