//! C, G, A, zeta'/zeta(1/2) and sum 1/gamma^2, with how each was obtained.

use zeta_explicit::cli::constant_rows;
use zeta_explicit::explicit::{tau_square_sum, KernelParams};
use zeta_explicit::{load_zeros, EvalParams};

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let p = KernelParams::default();
    let eval = EvalParams::default();
    for row in constant_rows(&p, &eval, &zeros)? {
        println!(
            "{:<24} {:>22.15e}  {} ({})",
            row.name, row.value, row.method, row.truncation
        );
    }

    // how the truncated 1/gamma^2 sum approaches the closed form
    println!("\n{:>6} {:>12} {:>12}", "zeros", "no tail", "with tail");
    for k in [10, 100, 1000, 10_000] {
        let r = tau_square_sum(&p.with_k_zeros(k), &eval, &zeros)?;
        let head = r.details["truncated_sum"];
        println!(
            "{k:>6} {:>12.3e} {:>12.3e}",
            (head - r.rhs.re()).abs(),
            r.residual
        );
    }
    Ok(())
}
