//! The equivariant map delta whose fixed points are exactly Lambda.

use eqcurve::equivariant::{build_delta, verify_delta_equivariance, verify_fixed_locus, Locus};
use eqcurve::projline::{FinSubgroupH, P1Point};

fn main() -> eqcurve::Result<()> {
    let h = FinSubgroupH::dihedral(3)?;
    // two orbits: the size-6 orbit of 2 and the size-2 orbit {0, inf}
    let mut lambda: Vec<P1Point> = Vec::new();
    for seed in [P1Point::from_int(2), P1Point::from_int(0)] {
        for g in h.elements() {
            let q = g.apply(&seed);
            if !lambda.contains(&q) {
                lambda.push(q);
            }
        }
    }
    let (delta, orbits) = build_delta(&h, &lambda)?;
    for o in &orbits {
        println!("orbit of size {}: d = {}, pair {}", o.locus.len(), o.d, o.pair);
    }
    println!("delta = {delta}");
    let mut cert = verify_delta_equivariance(&delta, &h);
    cert.extend(verify_fixed_locus(&delta, &Locus::from_points(&lambda)?));
    println!("{cert}");
    assert!(cert.passed());
    Ok(())
}
