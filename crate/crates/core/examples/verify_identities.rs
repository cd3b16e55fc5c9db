//! Both sides of the zero-sum identities at a few points, with 10^4 zeros.

use num_complex::Complex64;
use zeta_explicit::explicit::{
    catalan_identity_residual, derivative_identity_residual, integrated_identity_residual,
    main_identity_residual, trig_identity_residual, Companion, KernelParams,
};
use zeta_explicit::{load_zeros, ArithTable, IdentityReport};

fn show(r: &IdentityReport) {
    println!(
        "{:<28} lhs {:<24} rhs {:<24} residual {:.2e}",
        r.name,
        format!("{:.14}", r.lhs.re()),
        format!("{:.14}", r.rhs.re()),
        r.residual
    );
}

fn main() -> zeta_explicit::Result<()> {
    let zeros = load_zeros("data/zeros_10k.txt")?;
    let arith = ArithTable::build(1_000_000)?;
    let p = KernelParams::default();

    for x in [0.5, 2.0, 5.0] {
        show(&main_identity_residual(
            Complex64::new(x, 0.0),
            &p,
            &zeros,
            &arith,
        )?);
    }
    // off the real axis too
    show(&main_identity_residual(
        Complex64::new(3.0, 1.0),
        &p,
        &zeros,
        &arith,
    )?);

    for z in [0.5, 1.5, 3.0] {
        let z = Complex64::new(z, 0.0);
        for c in [Companion::Mangoldt, Companion::HalfInteger] {
            show(&trig_identity_residual(z, c, &p, &zeros, &arith)?);
            show(&integrated_identity_residual(z, c, &p, &zeros, &arith)?);
        }
    }
    show(&derivative_identity_residual(&p, &zeros)?);
    let cat = catalan_identity_residual(&p, &zeros)?;
    show(&cat);
    for (k, v) in &cat.details {
        println!("    {k} = {v:.3e}");
    }
    Ok(())
}
