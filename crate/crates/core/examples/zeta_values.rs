//! Zeta and its derivatives off and on the critical line.

use num_complex::Complex64;
use zeta_explicit::special::{logderiv_halfint, theta_rs, zeta_hasse, EvalParams};

fn main() -> zeta_explicit::Result<()> {
    let eval = EvalParams::default();
    let points = [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.5, 14.134725142),
        Complex64::new(-0.5, 21.022039639),
        Complex64::new(0.5, 1000.0),
    ];
    for s in points {
        let jet = eval.jet(s)?;
        println!("s = {s:<22} zeta = {:<44} zeta' = {}", jet.value, jet.d1);
    }

    // The Hasse series converges everywhere except s = 1; compare at s = 0.3 + 2i.
    let s = Complex64::new(0.3, 2.0);
    println!(
        "\nEuler-Maclaurin {}\nHasse (n = 80)  {}",
        eval.zeta(s)?,
        zeta_hasse(s, 80)?
    );

    println!("\ntheta(100) = {:.15}", theta_rs(100.0)?);
    for n in [1, 2, 5, 10, 20] {
        println!("zeta'/zeta({n}.5) = {:.17e}", logderiv_halfint(n));
    }
    Ok(())
}
