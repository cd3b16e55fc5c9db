//! Complex log-gamma, digamma and trigamma by upward recurrence and the
//! Stirling series.

use std::f64::consts::PI;

use num_complex::Complex64;

/// `B_2, B_4, ..., B_24`.
pub(crate) const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

const STIRLING_TERMS: usize = 10;
const SHIFT_RADIUS: f64 = 15.0;

fn shift_count(z: Complex64) -> usize {
    if z.norm() >= SHIFT_RADIUS {
        return 0;
    }
    let mut n = 0usize;
    while (z + n as f64).norm() < SHIFT_RADIUS {
        n += 1;
    }
    n
}

/// A branch of `log Gamma(z)` for `Re z > 0`; its exponential is `Gamma(z)`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "ln_gamma expects Re z > 0, got {z}");
    let n = shift_count(z);
    let mut shift = Complex64::new(0.0, 0.0);
    for k in 0..n {
        shift += (z + k as f64).ln();
    }
    let w = z + n as f64;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for k in 1..=STIRLING_TERMS {
        let kf = k as f64;
        series += pow * (BERNOULLI_EVEN[k - 1] / (2.0 * kf * (2.0 * kf - 1.0)));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

/// `Gamma(z)` anywhere off the non-positive integers (reflection for `Re z < 1/2`).
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma(z).exp()
    } else {
        PI / ((z * PI).sin() * ln_gamma(1.0 - z).exp())
    }
}

/// `psi(z) = Gamma'(z)/Gamma(z)` for `Re z > 0`.
pub fn digamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let n = shift_count(z);
    let mut shift = Complex64::new(0.0, 0.0);
    for k in 0..n {
        shift += (z + k as f64).inv();
    }
    let w = z + n as f64;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv2;
    for k in 1..=STIRLING_TERMS {
        series += pow * (BERNOULLI_EVEN[k - 1] / (2.0 * k as f64));
        pow *= inv2;
    }
    w.ln() - 0.5 * inv - series - shift
}

/// `psi'(z)` for `Re z > 0`.
pub fn trigamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let n = shift_count(z);
    let mut shift = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let q = z + k as f64;
        shift += (q * q).inv();
    }
    let w = z + n as f64;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv2 * inv;
    for k in 1..=STIRLING_TERMS {
        series += pow * BERNOULLI_EVEN[k - 1];
        pow *= inv2;
    }
    inv + 0.5 * inv2 + series + shift
}
