//! Lambda(t) on [2, 26] from zeros alone, next to Landau's sharp-cutoff
//! formula. Writes CSV `t,reconstructed,landau,reference` to stdout.

use zeta_explicit::explicit::{
    abel_limit_series, conjecture_series, landau_mangoldt, mangoldt_reconstruct, KernelParams,
};
use zeta_explicit::{load_zeros, ArithFn, ArithTable};

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let arith = ArithTable::build(1000)?;
    let p = KernelParams::default();
    let cut = zeros.last();

    println!("t,reconstructed,landau,reference");
    for i in 0..=480 {
        let t = 2.0 + 0.05 * i as f64;
        println!(
            "{t:.2},{:.16e},{:.16e},{:.16e}",
            mangoldt_reconstruct(t, &p, &zeros)?,
            landau_mangoldt(t, cut, &zeros)?,
            arith.at_real(t, ArithFn::Mangoldt)?
        );
    }

    // Abel-weighted cosine sums, reported only
    for t in [6.0, 7.0] {
        eprintln!(
            "t = {t}: Abel z=0.999 -> {:.6}, weighted partial sum -> {:.6}",
            abel_limit_series(t, 0.999, &p, &zeros)?,
            conjecture_series(t, &p, &zeros)?
        );
    }
    Ok(())
}
