//! An automorphism of A^3 extending a Moebius map of the embedded curve.

use eqcurve::exactfield::CycNum;
use eqcurve::planar3::{extension_example, fmt_triple, verify_extension};

fn main() -> eqcurve::Result<()> {
    let ex = extension_example(&CycNum::from_int(2), &CycNum::from_int(3))?;
    println!("tau = ({}, {}, {})", ex.tau[0], ex.tau[1], ex.tau[2]);
    println!("rho = {}", ex.rho);
    let f = ex.composite();
    println!("F = {}", fmt_triple(f.forward()));
    let cert = verify_extension(f.forward(), &ex.tau, &ex.rho);
    println!("{cert}");
    assert!(cert.passed());
    Ok(())
}
