//! Overflow-free hyperbolic ratios used as zero-sum weights.
//!
//! `sinh(x g)/sinh(pi g)` and friends are computed as `e^{(x-pi) g}` times
//! factors bounded by 1, so they stay finite for any ordinate `g`.

use std::f64::consts::PI;

/// `sinh(x g) / sinh(pi g)` for `0 <= x <= pi`, `g > 0`.
#[inline]
pub fn kernel_sinh_ratio(x: f64, gamma: f64) -> f64 {
    debug_assert!((0.0..=PI).contains(&x) && gamma > 0.0);
    ((x - PI) * gamma).exp() * (-(-2.0 * x * gamma).exp_m1()) / (-(-2.0 * PI * gamma).exp_m1())
}

/// `cosh(x g) / sinh(pi g)` for `0 <= x <= pi`, `g > 0`.
#[inline]
pub fn kernel_cosh_ratio(x: f64, gamma: f64) -> f64 {
    debug_assert!((0.0..=PI).contains(&x) && gamma > 0.0);
    ((x - PI) * gamma).exp() * (1.0 + (-2.0 * x * gamma).exp()) / (-(-2.0 * PI * gamma).exp_m1())
}

/// `(cosh(x g) - 1) / sinh(pi g)` for `0 <= x <= pi`, without cancellation at small `x g`.
#[inline]
pub fn kernel_cosh_minus_one_ratio(x: f64, gamma: f64) -> f64 {
    debug_assert!((0.0..=PI).contains(&x) && gamma > 0.0);
    let m = (-x * gamma).exp_m1();
    ((x - PI) * gamma).exp() * m * m / (-(-2.0 * PI * gamma).exp_m1())
}

/// `1 / sinh(pi g)`.
#[inline]
pub fn inv_sinh_pi(gamma: f64) -> f64 {
    2.0 * (-PI * gamma).exp() / (-(-2.0 * PI * gamma).exp_m1())
}

/// `e^{-pi g} / sinh(pi g) = 2 e^{-2 pi g} / (1 - e^{-2 pi g})`.
#[inline]
pub fn exp_over_sinh_pi(gamma: f64) -> f64 {
    2.0 * (-2.0 * PI * gamma).exp() / (-(-2.0 * PI * gamma).exp_m1())
}

/// `sinh(z g)/sinh(pi g)` for complex `z = a + ib` with `|a| <= pi`, split as
/// `sinh(a g) cos(b g) + i cosh(a g) sin(b g)` over `sinh(pi g)`.
pub fn kernel_sinh_ratio_complex(a: f64, b: f64, gamma: f64) -> (f64, f64) {
    let sign = a.signum();
    let ks = sign * kernel_sinh_ratio(a.abs(), gamma);
    let kc = kernel_cosh_ratio(a.abs(), gamma);
    let (sb, cb) = (b * gamma).sin_cos();
    (ks * cb, kc * sb)
}

/// `(cosh(z g) - 1)/sinh(pi g)` for complex `z = a + ib` with `|a| <= pi`.
pub fn kernel_cosh_minus_one_complex(a: f64, b: f64, gamma: f64) -> (f64, f64) {
    let a_abs = a.abs();
    let (sb, cb) = (b * gamma).sin_cos();
    let half_sin = (0.5 * b * gamma).sin();
    let re = kernel_cosh_minus_one_ratio(a_abs, gamma) * cb
        - 2.0 * half_sin * half_sin * inv_sinh_pi(gamma);
    let im = a.signum() * kernel_sinh_ratio(a_abs, gamma) * sb;
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_arguments_give_one() {
        for g in [0.5, 14.134725, 1e3, 1e6] {
            assert_eq!(kernel_sinh_ratio(PI, g), 1.0);
        }
    }

    #[test]
    fn frozen_values() {
        // 50-digit reference values (mpmath) for the stable closed forms.
        // The f64 nearest 3.14 sits 1.2e-16 above it, hence the 1e-13 slack.
        let v = kernel_sinh_ratio(3.14, 100.0);
        assert!((v - 0.852_770_038_755_327).abs() < 1e-13, "{v}");
        let v = kernel_cosh_ratio(3.14, 14.134725);
        assert!((v - 0.977_739_777_515_394_2).abs() < 1e-13, "{v}");
    }

    #[test]
    fn huge_ordinate_stays_finite() {
        let v = kernel_sinh_ratio(3.14, 10_000.0);
        assert!(v.is_finite());
        let naive = (3.14f64 * 10_000.0).sinh() / (PI * 10_000.0).sinh();
        assert!(!naive.is_finite() || naive.is_nan());
        let expect = ((3.14 - PI) * 10_000.0f64).exp();
        assert!((v / expect - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cosh_kernel_dominates_sinh_kernel() {
        for &x in &[0.1, 1.0, 3.0, 3.14] {
            for &g in &[14.13, 30.0, 500.0] {
                assert!(kernel_cosh_ratio(x, g) >= kernel_sinh_ratio(x, g));
            }
        }
        let g = 11.0;
        assert!((kernel_cosh_ratio(3.14, g) - kernel_sinh_ratio(3.14, g)).abs() < 1e-12);
    }

    #[test]
    fn cosh_minus_one_matches_difference() {
        let (x, g) = (2.0, 21.022039639);
        let direct = kernel_cosh_ratio(x, g) - inv_sinh_pi(g);
        assert!((kernel_cosh_minus_one_ratio(x, g) - direct).abs() < 1e-16);
        assert_eq!(kernel_cosh_minus_one_ratio(0.0, g), 0.0);
    }

    #[test]
    fn complex_split_reduces_to_real() {
        let (re, im) = kernel_sinh_ratio_complex(-1.5, 0.0, 14.134725);
        assert_eq!(re, -kernel_sinh_ratio(1.5, 14.134725));
        assert_eq!(im, 0.0);
    }
}
