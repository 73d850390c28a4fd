//! Closed-form orbit data for the tetrahedral group, one free orbit.

use eqcurve::embed3::{preset_family, preset_params_through, verify_tau, PresetKind};
use eqcurve::projline::P1Point;

fn main() -> eqcurve::Result<()> {
    let kind = PresetKind::Tetrahedral;
    // the generic orbit through 2
    let params = preset_params_through(kind, &P1Point::from_int(2));
    let p = preset_family(kind, &[params])?;
    println!("{} orbit(s), |Lambda| = {}", p.orbits.len(), p.lambda.len());
    for o in &p.orbits {
        println!("  p^{} ~ {}", o.d, o.power);
        println!("  pair {}", o.pair);
    }
    println!("{}", p.embedding);
    let cert = verify_tau(&p.embedding, &p.h);
    println!("{cert}");
    assert!(cert.passed());
    Ok(())
}
