//! Load a zero table, inspect it and compare counts with the smooth
//! Riemann-von Mangoldt estimate.
//!
//! cargo run --example load_zeros -- [path]

use zeta_explicit::zeros::{backlund_estimate, load_zeros};

fn main() -> zeta_explicit::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "data/zeros_10k.txt".into());
    let table = load_zeros(&path)?;
    println!(
        "{} ordinates from {:.9} to {:.9}, {} decimals, sha256 {}",
        table.count(),
        table.first(),
        table.last(),
        table.source_precision(),
        &table.digest()[..16]
    );
    println!("{:>8} {:>8} {:>10}", "T", "N(T)", "estimate");
    for t in [50.0, 100.0, 200.0, 500.0, 1000.0, 5000.0] {
        println!(
            "{t:>8} {:>8} {:>10.3}",
            table.count_below(t)?,
            backlund_estimate(t)?
        );
    }
    let head = table.truncated(5)?;
    print!("first five:\n{}", head.to_text());
    Ok(())
}
