//! The staircase F(t) - sum sin(gamma log t)/gamma on [25, 55] against the
//! weighted prime-power sum, as CSV.

use zeta_explicit::explicit::reconstruct::{staircase_lhs, staircase_rhs};
use zeta_explicit::explicit::KernelParams;
use zeta_explicit::{load_zeros, ArithTable};

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let arith = ArithTable::build(100)?;
    let p = KernelParams::default();
    println!("t,zero_side,prime_side");
    for i in 0..=600 {
        let t = 25.0 + 0.05 * i as f64;
        println!(
            "{t:.2},{:.16e},{:.16e}",
            staircase_lhs(t, &p, &zeros)?,
            staircase_rhs(t, &arith)?
        );
    }
    Ok(())
}
