//! Parallel sums whose rounding does not depend on the thread count.
//!
//! The index range is cut into fixed chunks; each chunk is summed in order,
//! and the chunk totals are combined by a fixed pairwise tree. Rayon only
//! decides *who* sums a chunk, never how the partial sums associate.

use std::ops::Add;

use num_complex::Complex64;
use rayon::prelude::*;

/// Terms per chunk.
pub const CHUNK: usize = 512;

pub trait Summand: Copy + Send + Sync + Add<Output = Self> {
    const ZERO: Self;
}

impl Summand for f64 {
    const ZERO: Self = 0.0;
}

impl Summand for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
}

/// A pair of real sums carried together.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Pair(pub f64, pub f64);

impl Add for Pair {
    type Output = Pair;
    fn add(self, o: Pair) -> Pair {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}

impl Summand for Pair {
    const ZERO: Self = Pair(0.0, 0.0);
}

/// `sum_{i < n} f(i)` with the deterministic chunked tree.
pub fn tree_sum<T, F>(n: usize, f: F) -> T
where
    T: Summand,
    F: Fn(usize) -> T + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let partial: Vec<T> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(n);
            (lo..hi).fold(T::ZERO, |acc, i| acc + f(i))
        })
        .collect();
    pairwise(&partial)
}

/// Sequential pairwise sum of a slice.
pub fn pairwise<T: Summand>(v: &[T]) -> T {
    match v.len() {
        0 => T::ZERO,
        1 => v[0],
        n => {
            let (a, b) = v.split_at(n / 2);
            pairwise(a) + pairwise(b)
        }
    }
}
