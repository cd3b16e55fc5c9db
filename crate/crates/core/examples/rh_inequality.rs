//! Decomposes the bracket of the large-x inequality into its pieces. The
//! zero-sum piece is below its bound; h(x) and the companion sum are not
//! small, so no bound is asserted for the whole.

use zeta_explicit::explicit::{limit_pi_check, rh_inequality_margin, KernelParams};
use zeta_explicit::{load_zeros, ArithTable};

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let arith = ArithTable::build(1_000_000)?;
    let p = KernelParams::default();
    for x in [1e2, 1e3, 1e4] {
        let r = rh_inequality_margin(x, &p, &zeros, &arith)?;
        println!(
            "x = {x:e}: |bracket| = {:.3e}, decomposition residual {:.1e}",
            r.details["abs_lhs"], r.residual
        );
        for k in ["h", "second_sum", "zero_sum", "zero_sum_bound"] {
            println!("    {k:<15} {:>12.4e}", r.details[k]);
        }
    }
    for x in [1e-4, 1e-5, 1e4, 1e5] {
        println!(
            "x = {x:e}: limit sum = {:.6} (pi = {:.6})",
            limit_pi_check(x, &arith)?,
            std::f64::consts::PI
        );
    }
    Ok(())
}
