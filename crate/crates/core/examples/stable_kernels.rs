//! The kernel sinh(x g)/sinh(pi g) evaluated naively overflows once pi g
//! passes ~710; the scaled form stays finite and agrees where both work.

use std::f64::consts::PI;

use zeta_explicit::special::{kernel_cosh_minus_one_ratio, kernel_sinh_ratio};

fn main() {
    let x = zeta_explicit::KernelParams::default().x;
    println!(
        "{:>10} {:>24} {:>24} {:>10}",
        "gamma", "stable", "naive", "rel diff"
    );
    for g in [14.134725142, 100.0, 200.0, 225.0, 250.0, 1e4, 1e6] {
        let stable = kernel_sinh_ratio(x, g);
        let naive = (x * g).sinh() / (PI * g).sinh();
        let rel = ((stable - naive) / stable).abs();
        println!("{g:>10} {stable:>24.16e} {naive:>24.16e} {rel:>10.1e}");
    }
    // small x g: cosh(x g) - 1 loses everything when formed directly
    let (x, g) = (1e-9, 14.134725142);
    println!(
        "\n(cosh - 1)/sinh at x = 1e-9: stable {:.6e}, naive {:.6e}",
        kernel_cosh_minus_one_ratio(x, g),
        ((x * g).cosh() - 1.0) / (PI * g).sinh()
    );
}
