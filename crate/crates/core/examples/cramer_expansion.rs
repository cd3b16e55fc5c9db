//! sum gamma^k e^{-gamma/T} against its asymptotic expansion, k = 0, 1, 2.

use zeta_explicit::explicit::{constant_a, cramer_expansion_residual, KernelParams};
use zeta_explicit::load_zeros;

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let p = KernelParams::default();
    println!("A = {:.9}", constant_a(&p, &zeros));
    println!(
        "{:>5} {:>6} {:>24} {:>12} {:>12}",
        "order", "T", "zero sum", "residual", "next term"
    );
    for order in 0..=2u8 {
        for t in [10.0, 20.0, 40.0, 80.0, 160.0] {
            let r = cramer_expansion_residual(t, order, &p, &zeros)?;
            println!(
                "{order:>5} {t:>6} {:>24.12} {:>12.3e} {:>12.3e}",
                r.lhs.re(),
                r.residual,
                r.details["remainder_scale"]
            );
        }
    }
    Ok(())
}
