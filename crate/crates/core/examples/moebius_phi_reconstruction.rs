//! mu(t) and phi(t) from zeros and the residues 1/zeta'(rho), zeta(rho-1)/zeta'(rho).
//!
//! The residues are cached next to the zeros file (or in
//! ZETA_EXPLICIT_CACHE_DIR); the first run computes 10^4 of them.

use std::path::Path;
use std::time::Instant;

use zeta_explicit::explicit::{moebius_reconstruct, phi_reconstruct, KernelParams, ResidueCache};
use zeta_explicit::{load_zeros, ArithTable, EvalParams};

fn main() -> zeta_explicit::Result<()> {
    let path = Path::new("data/zeros_10k.txt");
    let zeros = load_zeros(path)?;
    let arith = ArithTable::build(100)?;
    let p = KernelParams::default();
    let cache = ResidueCache::for_zeros_file(path, EvalParams::default());

    let start = Instant::now();
    cache.get(&zeros, p.k_zeros)?;
    eprintln!(
        "residues ready in {:.2?} (cache {:?})",
        start.elapsed(),
        cache.dir()
    );

    println!(
        "{:>3} {:>10} {:>3} {:>12} {:>4}",
        "t", "mu~", "mu", "phi~", "phi"
    );
    for n in 2..=26usize {
        let t = n as f64;
        println!(
            "{n:>3} {:>10.5} {:>3} {:>12.5} {:>4}",
            moebius_reconstruct(t, &p, &zeros, &cache)?,
            arith.moebius(n),
            phi_reconstruct(t, &p, &zeros, &cache)?,
            arith.phi(n)
        );
    }
    Ok(())
}
