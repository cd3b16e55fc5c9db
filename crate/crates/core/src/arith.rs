//! Sieved arithmetic functions and the partial sums built from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported sieve bound.
pub const MAX_BOUND: usize = 100_000_000;

/// Tolerance used to decide that a real argument is an integer.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

/// Largest sieve [`mangoldt_dirichlet_tail`] builds before switching to the
/// prime-number-theorem tail.
const DIRICHLET_SIEVE_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithFn {
    Mangoldt,
    Moebius,
    Phi,
}

/// `Lambda(n)`, `mu(n)` and `phi(n)` for `n <= n_max`, with prefix sums.
#[derive(Debug, Clone)]
pub struct ArithTable {
    n_max: usize,
    mangoldt: Vec<f64>,
    moebius: Vec<i8>,
    phi: Vec<u32>,
    // psi_prefix[n] = sum_{m <= n} Lambda(m)
    psi_prefix: Vec<f64>,
    // sqrt_prefix[n] = sum_{m <= n} Lambda(m)/sqrt(m)
    sqrt_prefix: Vec<f64>,
}

impl ArithTable {
    /// Linear sieve up to `n_max`.
    pub fn build(n_max: usize) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::Domain(format!("sieve bound {n_max} is below 2")));
        }
        if n_max > MAX_BOUND {
            return Err(Error::CapacityExceeded {
                requested: n_max as u64,
                capacity: MAX_BOUND as u64,
            });
        }
        let len = n_max + 1;
        let mut least = vec![0u32; len];
        let mut primes: Vec<u32> = Vec::new();
        let mut mangoldt = vec![0.0f64; len];
        let mut moebius = vec![0i8; len];
        let mut phi = vec![0u32; len];
        moebius[1] = 1;
        phi[1] = 1;
        for i in 2..len {
            if least[i] == 0 {
                least[i] = i as u32;
                primes.push(i as u32);
                mangoldt[i] = (i as f64).ln();
                moebius[i] = -1;
                phi[i] = i as u32 - 1;
            }
            let li = least[i];
            for &p in &primes {
                let ip = i * p as usize;
                if p > li || ip > n_max {
                    break;
                }
                least[ip] = p;
                if p == li {
                    moebius[ip] = 0;
                    phi[ip] = phi[i] * p;
                    // i * p is a prime power exactly when i already is one
                    mangoldt[ip] = mangoldt[i];
                } else {
                    moebius[ip] = -moebius[i];
                    phi[ip] = phi[i] * (p - 1);
                }
            }
        }

        let mut psi_prefix = vec![0.0f64; len];
        let mut sqrt_prefix = vec![0.0f64; len];
        for n in 1..len {
            psi_prefix[n] = psi_prefix[n - 1] + mangoldt[n];
            sqrt_prefix[n] = sqrt_prefix[n - 1] + mangoldt[n] / (n as f64).sqrt();
        }

        Ok(Self {
            n_max,
            mangoldt,
            moebius,
            phi,
            psi_prefix,
            sqrt_prefix,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `Lambda(n)`, zero at `n = 0, 1`.
    #[inline]
    pub fn mangoldt(&self, n: usize) -> f64 {
        self.mangoldt[n]
    }

    #[inline]
    pub fn moebius(&self, n: usize) -> i8 {
        self.moebius[n]
    }

    #[inline]
    pub fn phi(&self, n: usize) -> u32 {
        self.phi[n]
    }

    pub fn mangoldt_slice(&self) -> &[f64] {
        &self.mangoldt
    }

    /// Arithmetic function extended to the positive reals by zero off the
    /// integers.
    pub fn at_real(&self, t: f64, which: ArithFn) -> Result<f64> {
        self.check_range(t)?;
        let r = t.round();
        if (t - r).abs() > INTEGER_TOLERANCE || r < 1.0 {
            return Ok(0.0);
        }
        let n = r as usize;
        Ok(match which {
            ArithFn::Mangoldt => self.mangoldt[n],
            ArithFn::Moebius => self.moebius[n] as f64,
            ArithFn::Phi => self.phi[n] as f64,
        })
    }

    /// `sum_{n < t} Lambda(n)/sqrt(n)`, strictly below `t`.
    pub fn weighted_psi_sqrt(&self, t: f64) -> Result<f64> {
        self.check_range(t)?;
        Ok(self.sqrt_prefix[strict_floor(t)])
    }

    /// Chebyshev `psi(x) = sum_{n <= x} Lambda(n)`.
    pub fn chebyshev_psi(&self, x: f64) -> Result<f64> {
        self.check_range(x)?;
        Ok(self.psi_prefix[x.max(0.0).floor() as usize])
    }

    /// `psi(n)` for an integer bound already known to be in range.
    #[inline]
    pub(crate) fn psi_at(&self, n: usize) -> f64 {
        self.psi_prefix[n]
    }

    /// Mertens function `M(x) = sum_{n <= x} mu(n)`.
    pub fn mertens(&self, x: f64) -> Result<i64> {
        self.check_range(x)?;
        let m = x.max(0.0).floor() as usize;
        Ok(self.moebius[1..=m].iter().map(|&v| v as i64).sum())
    }

    fn check_range(&self, t: f64) -> Result<()> {
        if !(t > 0.0) || t > self.n_max as f64 {
            return Err(Error::OutOfRange {
                what: "t",
                value: t,
                limit: self.n_max as f64,
            });
        }
        Ok(())
    }
}

/// Largest integer strictly below `t`, treating values within the integer
/// tolerance of `n` as `n` itself.
fn strict_floor(t: f64) -> usize {
    let r = t.round();
    if (t - r).abs() <= INTEGER_TOLERANCE {
        (r as usize).saturating_sub(1)
    } else {
        t.floor() as usize
    }
}

/// `-zeta'(s)/zeta(s) = sum Lambda(m) m^{-s}` for real `s > 1`.
///
/// Summation stops at the first `m` with `log(m) m^{-s} < eps`. If that point
/// lies beyond the internal sieve cap, the remainder is replaced by its
/// prime-number-theorem approximation.
pub fn mangoldt_dirichlet_tail(s: f64, eps: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!(
            "Dirichlet series needs s > 1, got {s}"
        )));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidParams(format!(
            "eps = {eps} must be positive"
        )));
    }
    // first m past e^{1/s} (where log m / m^s starts decreasing) with a small bound
    let mut m_stop = 2usize;
    while m_stop < DIRICHLET_SIEVE_CAP {
        let m = m_stop as f64;
        if m.ln() * m.powf(-s) < eps && m > (1.0 / s).exp() {
            break;
        }
        m_stop = if m_stop < 64 {
            m_stop + 1
        } else {
            m_stop + m_stop / 8
        };
    }
    let bound = m_stop.min(DIRICHLET_SIEVE_CAP);
    let table = ArithTable::build(bound.max(2))?;
    let mut total = 0.0;
    for m in (2..=bound).rev() {
        let l = table.mangoldt(m);
        if l != 0.0 {
            total += l * (m as f64).powf(-s);
        }
    }
    if bound == DIRICHLET_SIEVE_CAP {
        // int_N^inf u^{-s} du - N^{-s} (psi(N) - N + log 2 pi)
        let n = bound as f64;
        let excess = table.psi_at(bound) - n + (2.0 * std::f64::consts::PI).ln();
        total += n.powf(1.0 - s) / (s - 1.0) - n.powf(-s) * excess;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn trial_mangoldt(n: usize) -> f64 {
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                let mut m = n;
                while m.is_multiple_of(p) {
                    m /= p;
                }
                return if m == 1 { (p as f64).ln() } else { 0.0 };
            }
            p += 1;
        }
        if n >= 2 {
            (n as f64).ln()
        } else {
            0.0
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn small_values() {
        let t = ArithTable::build(12).unwrap();
        assert_eq!(t.mangoldt(8), LN_2);
        assert_eq!(t.mangoldt(12), 0.0);
        assert_eq!(t.moebius(6), 1);
        assert_eq!(t.moebius(4), 0);
        assert_eq!(t.phi(12), 4);

        let t = ArithTable::build(2).unwrap();
        assert_eq!(t.mangoldt(2), LN_2);
        assert_eq!(t.moebius(2), -1);
        assert_eq!(t.phi(2), 1);
    }

    #[test]
    fn bounds() {
        assert!(matches!(ArithTable::build(1), Err(Error::Domain(_))));
        assert!(matches!(
            ArithTable::build(MAX_BOUND + 1),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn mangoldt_matches_trial_division() {
        let t = ArithTable::build(5000).unwrap();
        for n in 1..=5000 {
            assert_eq!(t.mangoldt(n), trial_mangoldt(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_is_multiplicative() {
        let t = ArithTable::build(10_000).unwrap();
        for m in 1..=100 {
            for n in 1..=100 {
                if gcd(m, n) == 1 {
                    assert_eq!(t.moebius(m * n), t.moebius(m) * t.moebius(n));
                }
            }
        }
    }

    #[test]
    fn divisor_sum_of_phi() {
        let t = ArithTable::build(3000).unwrap();
        let mut acc = vec![0u64; 3001];
        for d in 1..=3000 {
            for m in (d..=3000).step_by(d) {
                acc[m] += t.phi(d) as u64;
            }
        }
        for (n, &s) in acc.iter().enumerate().skip(1) {
            assert_eq!(s, n as u64);
        }
    }

    #[test]
    fn phi_of_primes() {
        let t = ArithTable::build(20_000).unwrap();
        for n in 2..=20_000 {
            let f = t.phi(n);
            assert!(f >= 1 && f as usize <= n);
            if t.moebius(n) == -1 && t.mangoldt(n) != 0.0 {
                assert_eq!(f as usize, n - 1);
            }
        }
    }

    #[test]
    fn at_real_values() {
        let t = ArithTable::build(100).unwrap();
        assert_eq!(t.at_real(4.0, ArithFn::Mangoldt).unwrap(), LN_2);
        assert_eq!(t.at_real(4.0 + 5e-10, ArithFn::Mangoldt).unwrap(), LN_2);
        for which in [ArithFn::Mangoldt, ArithFn::Moebius, ArithFn::Phi] {
            assert_eq!(t.at_real(4.5, which).unwrap(), 0.0);
        }
        assert_eq!(t.at_real(6.0, ArithFn::Mangoldt).unwrap(), 0.0);
        assert!(matches!(
            t.at_real(101.0, ArithFn::Phi),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn weighted_psi_is_strict() {
        let t = ArithTable::build(100).unwrap();
        assert_eq!(t.weighted_psi_sqrt(2.0).unwrap(), 0.0);
        let one = LN_2 / 2f64.sqrt();
        assert!((t.weighted_psi_sqrt(3.0).unwrap() - one).abs() < 1e-15);
        let direct: f64 = [2usize, 3, 4, 5, 7, 8, 9]
            .iter()
            .map(|&n| trial_mangoldt(n) / (n as f64).sqrt())
            .sum();
        assert!((t.weighted_psi_sqrt(10.0).unwrap() - direct).abs() < 1e-14);
    }

    #[test]
    fn chebyshev_and_mertens_sanity() {
        let t = ArithTable::build(1_000_000).unwrap();
        for x in [1e3, 1e4, 1e5, 1e6] {
            assert!((t.chebyshev_psi(x).unwrap() - x).abs() < 0.15 * x);
        }
        for x in [1e2, 1e3, 1e4, 1e5, 1e6] {
            assert!((t.mertens(x).unwrap() as f64).abs() <= x / 2.0);
        }
    }

    #[test]
    fn dirichlet_series() {
        // -zeta'(2)/zeta(2)
        let v = mangoldt_dirichlet_tail(2.0, 1e-16).unwrap();
        assert!((v - 0.569_960_993_094_532_4).abs() < 1e-9, "{v}");
        let v = mangoldt_dirichlet_tail(10.0, 1e-18).unwrap();
        assert!((v - 6.963_404_452_840_204e-4).abs() < 1e-17, "{v}");
        assert!(mangoldt_dirichlet_tail(10.0, 1.0).unwrap().is_finite());
        assert!(matches!(
            mangoldt_dirichlet_tail(1.0, 1e-9),
            Err(Error::Domain(_))
        ));
    }
}
