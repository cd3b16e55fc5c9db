//! Sieved Mangoldt, Moebius and Euler phi tables and their partial sums.

use zeta_explicit::arith::{ArithFn, ArithTable};

fn main() -> zeta_explicit::Result<()> {
    let t = ArithTable::build(1_000_000)?;
    println!("{:>3} {:>10} {:>3} {:>4}", "n", "Lambda", "mu", "phi");
    for n in 2..=16 {
        println!(
            "{n:>3} {:>10.6} {:>3} {:>4}",
            t.mangoldt(n),
            t.moebius(n),
            t.phi(n)
        );
    }
    // values at non-integers are zero by convention
    println!("\nLambda(4.5) = {}", t.at_real(4.5, ArithFn::Mangoldt)?);
    for x in [1e2, 1e4, 1e6] {
        println!(
            "x = {x:>8}: psi(x) - x = {:>10.3}, M(x) = {:>4}, sum_(n<x) Lambda/sqrt n = {:.4}",
            t.chebyshev_psi(x)? - x,
            t.mertens(x)?,
            t.weighted_psi_sqrt(x)?
        );
    }
    Ok(())
}
