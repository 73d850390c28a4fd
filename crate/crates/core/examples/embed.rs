//! Equivariant embedding of P^1 minus four points, with its full certificate.

use eqcurve::embed3::{build_tau, verify_tau};
use eqcurve::projline::{aut_of_lambda, P1Point, DEFAULT_GROUP_CAP};

fn main() -> eqcurve::Result<()> {
    let lambda = [P1Point::from_int(0), P1Point::from_int(1), P1Point::from_int(-1), P1Point::infinity()];
    let h = aut_of_lambda(&lambda, DEFAULT_GROUP_CAP)?;
    println!("H = {} of order {}", h.kind(), h.order());

    let tau = build_tau(&h, &lambda)?;
    println!("{tau}");
    let cert = verify_tau(&tau, &h);
    println!("{cert}");
    assert!(cert.passed());
    Ok(())
}
