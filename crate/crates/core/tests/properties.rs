use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use zeta_explicit::arith::{ArithFn, ArithTable};
use zeta_explicit::explicit::reduce::tree_sum;
use zeta_explicit::explicit::{h_total, IdentityReport, KernelParams, ReportParams};
use zeta_explicit::special::{kernel_cosh_ratio, kernel_sinh_ratio, EvalParams};
use zeta_explicit::zeros::{parse_zeros_str, ZeroTable};

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_ignores_thread_count(v in prop::collection::vec(-1e6f64..1e6, 0..5000)) {
        let one = pool(1).install(|| tree_sum(v.len(), |i| v[i]));
        let four = pool(4).install(|| tree_sum(v.len(), |i| v[i]));
        prop_assert_eq!(one.to_bits(), four.to_bits());
    }

    #[test]
    fn zero_text_round_trip(steps in prop::collection::vec(0.001f64..10.0, 1..200)) {
        let mut g = 14.134725142;
        let ords: Vec<f64> = steps.iter().map(|s| { g += s; (g * 1e9).round() / 1e9 }).collect();
        let mut dedup = ords.clone();
        dedup.dedup();
        prop_assume!(dedup.len() == ords.len());
        let t = ZeroTable::from_ordinates(ords, 9).unwrap();
        let back = parse_zeros_str(&t.to_text()).unwrap();
        prop_assert_eq!(back.ordinates(), t.ordinates());
    }

    #[test]
    fn kernel_matches_naive(x in 0.0f64..PI, g in 14.0f64..200.0) {
        let naive = (x * g).sinh() / (PI * g).sinh();
        let stable = kernel_sinh_ratio(x, g);
        prop_assume!(naive > 1e-300);
        prop_assert!((stable - naive).abs() <= 1e-12 * naive, "{} vs {}", stable, naive);
        let naive_c = (x * g).cosh() / (PI * g).sinh();
        prop_assert!((kernel_cosh_ratio(x, g) - naive_c).abs() <= 1e-12 * naive_c);
    }

    #[test]
    fn kernel_bounded_and_monotone(x in 0.0f64..3.1, g in 14.0f64..1e6) {
        let a = kernel_sinh_ratio(x, g);
        let b = kernel_sinh_ratio(x + 0.04, g);
        prop_assert!(a.is_finite() && (0.0..=1.0).contains(&a));
        prop_assert!(b >= a);
    }

    #[test]
    fn zeta_conjugate_symmetry(re in -3.0f64..4.0, im in 0.5f64..60.0) {
        let eval = EvalParams::default();
        let s = Complex64::new(re, im);
        let a = eval.zeta(s.conj()).unwrap();
        let b = eval.zeta(s).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-13 * b.norm().max(1e-3));
    }

    #[test]
    fn h_is_antisymmetric(re in 0.05f64..5.0, im in -2.0f64..2.0) {
        let z = Complex64::new(re, im);
        prop_assume!((z - 1.0).norm() > 0.01);
        let s = h_total(z).unwrap() + h_total(z.inv()).unwrap();
        prop_assert!(s.norm() < 1e-11 * h_total(z).unwrap().norm().max(1.0));
    }

    #[test]
    fn arithmetic_vanishes_off_integers(n in 2usize..9000, frac in 0.001f64..0.999) {
        let t = table();
        for which in [ArithFn::Mangoldt, ArithFn::Moebius, ArithFn::Phi] {
            prop_assert_eq!(t.at_real(n as f64 + frac, which).unwrap(), 0.0);
        }
    }

    #[test]
    fn report_json_round_trip(l in -1e3f64..1e3, r in -1e3f64..1e3) {
        let rep = IdentityReport::new("x", l, Complex64::new(r, 0.5), ReportParams::Kernel(KernelParams::default()))
            .detail("k", 1.5);
        let text = serde_json::to_string(&rep).unwrap();
        let back: IdentityReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, rep);
    }
}

fn table() -> &'static ArithTable {
    static T: std::sync::OnceLock<ArithTable> = std::sync::OnceLock::new();
    T.get_or_init(|| ArithTable::build(10_000).unwrap())
}
