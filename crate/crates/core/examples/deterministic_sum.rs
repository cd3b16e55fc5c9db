//! Zero sums are reduced in fixed chunks and combined in a fixed order, so
//! the result is bit-identical for any number of threads.

use zeta_explicit::explicit::reduce::tree_sum;
use zeta_explicit::load_zeros;

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let g = zeros.ordinates();
    let f = |j: usize| (g[j] * 6f64.ln()).sin() / g[j];
    let mut bits = Vec::new();
    for threads in [1, 2, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        let s = pool.install(|| tree_sum(g.len(), f));
        println!("{threads} threads: {s:.17e} ({:#018x})", s.to_bits());
        bits.push(s.to_bits());
    }
    let naive: f64 = (0..g.len()).map(f).sum();
    println!("left-to-right: {naive:.17e}");
    assert!(bits.windows(2).all(|w| w[0] == w[1]));
    Ok(())
}
